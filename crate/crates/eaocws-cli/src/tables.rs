//! Bundled reference targets for the table-reproduction harness: ring-graph
//! registers together with the code dimension recorded for each at distance
//! 3 or 5. The harness re-runs the search for a cell and reports the
//! dimension it can confirm against the recorded target.

pub struct TableEntry {
    /// Display form of the recorded parameters; double parentheses mark a
    /// codeword set that is not XOR-closed.
    pub label: &'static str,
    pub n: usize,
    pub c: usize,
    pub r: usize,
    pub distance: usize,
    pub target_k: usize,
}

const fn entry(
    label: &'static str,
    n: usize,
    c: usize,
    r: usize,
    distance: usize,
    target_k: usize,
) -> TableEntry {
    TableEntry { label, n, c, r, distance, target_k }
}

/// Distance-3 targets on ring graphs, five to seven vertices.
pub const TABLE_D3: &[TableEntry] = &[
    entry("[[5,2,1,3;2]]", 5, 2, 1, 3, 4),
    entry("[[5,1,1,3;3]]", 5, 3, 1, 3, 2),
    entry("[[6,1,1,3;1]]", 6, 1, 1, 3, 2),
    entry("[[6,2,1,3;2]]", 6, 2, 1, 3, 4),
    entry("((6,4,1,3;3))", 6, 3, 1, 3, 4),
    entry("[[6,1,1,3;4]]", 6, 4, 1, 3, 2),
    entry("[[6,2,2,3;2]]", 6, 2, 2, 3, 4),
    entry("[[6,1,2,3;3]]", 6, 3, 2, 3, 2),
    entry("((7,4,1,3;1))", 7, 1, 1, 3, 4),
    entry("((7,8,1,3;2))", 7, 2, 1, 3, 8),
    entry("((7,7,1,3;3))", 7, 3, 1, 3, 7),
    entry("[[7,2,1,3;4]]", 7, 4, 1, 3, 4),
    entry("[[7,1,1,3;5]]", 7, 5, 1, 3, 2),
    entry("[[7,1,2,3;1]]", 7, 1, 2, 3, 2),
    entry("[[7,2,2,3;2]]", 7, 2, 2, 3, 4),
    entry("[[7,2,2,3;3]]", 7, 3, 2, 3, 4),
    entry("[[7,1,2,3;4]]", 7, 4, 2, 3, 2),
    entry("[[7,2,3,3;2]]", 7, 2, 3, 3, 4),
    entry("[[7,1,3,3;3]]", 7, 3, 3, 3, 2),
];

/// Distance-5 targets on the seven-vertex ring.
pub const TABLE_D5: &[TableEntry] = &[
    entry("[[7,2,1,5;4]]", 7, 4, 1, 5, 4),
    entry("[[7,1,1,5;5]]", 7, 5, 1, 5, 2),
];

/// Default cell subsets kept small enough for quick runs: a spread of
/// register shapes for distance 3, everything for distance 5.
pub const DEFAULT_D3_CELLS: &[(usize, usize, usize)] =
    &[(5, 2, 1), (6, 2, 2), (6, 3, 1), (7, 1, 1)];

pub fn find(
    entries: &'static [TableEntry],
    n: usize,
    c: usize,
    r: usize,
) -> Option<&'static TableEntry> {
    entries.iter().find(|e| e.n == n && e.c == c && e.r == r)
}
