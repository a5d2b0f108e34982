/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_demo_free: (a: number, b: number) => void;
export const demo_cohesion_vs_betweenness: (a: number, b: number, c: number, d: number) => [number, number, number, number];
export const demo_density_curve: (a: number, b: number, c: number, d: number) => [number, number, number, number];
export const demo_edges: (a: number) => number;
export const demo_karate: () => [number, number, number];
export const demo_planted: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
export const demo_truss_levels: (a: number, b: number, c: number, d: number) => [number, number, number, number];
export const demo_vertices: (a: number) => number;
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_start: () => void;
