/* tslint:disable */
/* eslint-disable */

/**
 * A weighted `rows × cols` grid with nested-dissection labels customized
 * for random weights.
 */
export class GridDemo {
    free(): void;
    [Symbol.dispose](): void;
    /**
     * Hubs of vertex `v` with their customized distances.
     */
    label(v: number): string;
    constructor(rows: number, cols: number, seed: bigint, grid_aware: boolean);
    /**
     * Label-merge answer for `s → t` next to the Dijkstra distance.
     */
    query(s: number, t: number): string;
    /**
     * Grid shape, ranks, label sizes, separator sets and summary statistics.
     */
    summary(): string;
}

/**
 * Rows of the star-clique experiment for comma-separated `k` values.
 */
export function gap_table(ks: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_griddemo_free: (a: number, b: number) => void;
    readonly gap_table: (a: number, b: number) => [number, number, number, number];
    readonly griddemo_label: (a: number, b: number) => [number, number];
    readonly griddemo_new: (a: number, b: number, c: bigint, d: number) => [number, number, number];
    readonly griddemo_query: (a: number, b: number, c: number) => [number, number];
    readonly griddemo_summary: (a: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
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
