/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_griddemo_free: (a: number, b: number) => void;
export const gap_table: (a: number, b: number) => [number, number, number, number];
export const griddemo_label: (a: number, b: number) => [number, number];
export const griddemo_new: (a: number, b: number, c: bigint, d: number) => [number, number, number];
export const griddemo_query: (a: number, b: number, c: number) => [number, number];
export const griddemo_summary: (a: number) => [number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
