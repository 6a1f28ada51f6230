/* tslint:disable */
/* eslint-disable */

/**
 * The character table of S_n, rows and columns in ascending lexicographic order.
 */
export function char_table(n: number): string;

/**
 * Builds the witness with the given arms (comma separated) and hook length
 * `r`, evaluates it, and compares with the predicted value.
 */
export function extremal_witness(arms: string, r: number, fixed_point: boolean): string;

/**
 * The diagram of `lambda`, its rim, and every rim hook of length `r`.
 * Cells are `[row, col]`, 1-indexed.
 */
export function rim_hooks(lambda: string, r: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly char_table: (a: number) => [number, number, number, number];
    readonly extremal_witness: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly rim_hooks: (a: number, b: number, c: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
