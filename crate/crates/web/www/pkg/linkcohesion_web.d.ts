/* tslint:disable */
/* eslint-disable */

/**
 * A loaded graph with its ground truth and cached hop strengths.
 */
export class Demo {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    /**
     * Interleaved `[cohesion, betweenness, ...]` per edge, followed by the
     * Pearson correlation (NaN if undefined).
     */
    cohesion_vs_betweenness(w1: number, w2: number, w3: number): Float64Array;
    /**
     * Density after each removal count `0..=|E|`.
     */
    density_curve(w1: number, w2: number, w3: number): Float64Array;
    /**
     * Zachary's karate club.
     */
    static karate(): Demo;
    /**
     * Planted-partition graph with `communities` equal blocks.
     */
    static planted(n: number, communities: number, p_in: number, p_out: number, seed: number): Demo;
    /**
     * Flattened `[k, clusters, ...]` for the original graph when `weights`
     * is empty, otherwise for the graph pruned under those weights. The
     * last three entries are the chosen level (0 if none), the detected
     * count and the F-score (NaN if undefined).
     */
    truss_levels(weights: Float64Array, min_level: number): Float64Array;
    readonly edges: number;
    readonly vertices: number;
}

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_demo_free: (a: number, b: number) => void;
    readonly demo_cohesion_vs_betweenness: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly demo_density_curve: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly demo_edges: (a: number) => number;
    readonly demo_karate: () => [number, number, number];
    readonly demo_planted: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
    readonly demo_truss_levels: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly demo_vertices: (a: number) => number;
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
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
