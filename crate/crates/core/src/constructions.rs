//! Generators for the extremal and exceptional graphs, each paired with the
//! properties it is claimed to have.
//!
//! Claims are computed from closed-form degree bands and edge formulas, not
//! from the generated graph, so an audit compares two independent routes.
//! Vertices are labeled class by class in the order the classes are listed
//! in each builder's documentation.

use std::fmt;

use serde::Serialize;

use crate::error::{ensure_range, Result};
use crate::graph::{self, binom2, Graph};
use crate::thresholds;

/// Builds `H(n, d)`: classes `A` (`d+1`), `B` (`d`), `C` (`n-2d-1`) with
/// `B ∪ C` a clique and `A` joined to all of `B`. No perfect matching.
pub fn build_h(n: usize, d: usize) -> Result<Graph> {
    ensure_range!(n.is_multiple_of(2) && n >= 2, "H(n,d) needs even n >= 2, got n={n}");
    ensure_range!(2 * d < n, "H(n,d) needs d < n/2, got n={n}, d={d}");
    let (a, b) = (d + 1, d);
    let mut g = Graph::new(n);
    for u in a..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// `K_{n/r+1}` followed by `(1-1/r)n - 1` isolated vertices.
pub fn build_g1(n: usize, r: usize) -> Result<Graph> {
    ensure_range!(r >= 3 && n.is_multiple_of(r) && n > 0, "G1 needs r >= 3 and r | n, got n={n}, r={r}");
    Ok(graph::disjoint_cliques(&[n / r + 1]).disjoint_union(&Graph::new(n - n / r - 1)))
}

/// `K_{1,D}` (centre first) followed by the complement of `T(n-D-1, r-2)`.
pub fn build_g2(n: usize, r: usize, d: usize) -> Result<Graph> {
    ensure_range!(r >= 3 && n.is_multiple_of(r) && n >= 2 * r, "G2 needs r >= 3 and n = kr, k >= 2, got n={n}, r={r}");
    ensure_range!(
        d * (r - 1) >= n && d + r <= n,
        "G2 needs n/(r-1) <= D <= n-r, got n={n}, r={r}, D={d}"
    );
    Ok(graph::star(d).disjoint_union(&graph::turan_complement(n - d - 1, r - 2)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AfVariant {
    /// Complement is `K_{n/r+1}` plus isolated vertices.
    I,
    /// Complement is `K_{1,n-r-j+1}`, `j` disjoint edges and `r-j-2` isolated vertices.
    Ii { j: usize },
}

/// The primal graph whose complement is one of the two exceptional graphs
/// for the edge condition `e(complement) <= min{C(n/r+1,2), n-r+1}`. The
/// complement is laid out as listed in [`AfVariant`].
pub fn build_af_exception(n: usize, r: usize, variant: AfVariant) -> Result<Graph> {
    ensure_range!(r >= 2 && n.is_multiple_of(r) && n >= r, "needs r >= 2 and r | n, got n={n}, r={r}");
    let complement = match variant {
        AfVariant::I => graph::disjoint_cliques(&[n / r + 1]).disjoint_union(&Graph::new(n - n / r - 1)),
        AfVariant::Ii { j } => {
            ensure_range!(j >= 1 && j + 2 <= r, "variant (ii) needs 1 <= j <= r-2, got j={j}, r={r}");
            ensure_range!(n >= 2 * r, "variant (ii) needs n >= 2r, got n={n}, r={r}");
            let edges = graph::disjoint_cliques(&vec![2; j]);
            graph::star(n - r - j + 1)
                .disjoint_union(&edges)
                .disjoint_union(&Graph::new(r - j - 2))
        }
    };
    Ok(complement.complement())
}

/// Classes `V_0` (`k`), `V_1..V_{r-2}` (`n/r` each), `V_{r-1}` (`2n/r-2k+1`),
/// `V_r` (`k-1`). `V_1..V_{r-2}` form a complete `(r-2)`-partite graph joined
/// to everything else, `V_{r-1} ∪ V_r` is a clique, and `V_0` is joined to
/// `V_r`.
pub fn build_extremal1(n: usize, r: usize, k: usize) -> Result<Graph> {
    ensure_range!(r >= 2 && n.is_multiple_of(r) && n > 0, "needs r >= 2 and r | n, got n={n}, r={r}");
    ensure_range!(k >= 1 && k < n / r, "needs 1 <= k < n/r, got n={n}, r={r}, k={k}");
    let q = n / r;
    let mut sizes = vec![k];
    sizes.extend(std::iter::repeat_n(q, r - 2));
    sizes.push(2 * q - 2 * k + 1);
    sizes.push(k - 1);
    let class_of = class_index(&sizes);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            let (cu, cv) = (class_of[u], class_of[v]);
            let partite = |c: usize| (1..=r - 2).contains(&c);
            let joined = (partite(cu) || partite(cv)) && cu != cv
                || cu >= r - 1 && cv >= r - 1
                || cu == 0 && cv == r;
            if joined {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Classes `V_1` (`k`), `V_2` (`(r-1)k - 1`), `V_3` (`n-rk+1`): `V_2` and `V_3`
/// are cliques, `V_2` is joined to `V_1` and `V_3`, and `V_1` is independent.
pub fn build_extremal2(n: usize, r: usize, k: usize) -> Result<Graph> {
    ensure_range!(r >= 2 && n.is_multiple_of(r) && n > 0, "needs r >= 2 and r | n, got n={n}, r={r}");
    ensure_range!(k >= 1 && k <= n / r, "needs 1 <= k <= n/r, got n={n}, r={r}, k={k}");
    let sizes = [k, (r - 1) * k - 1, n - r * k + 1];
    let class_of = class_index(&sizes);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            let (cu, cv) = (class_of[u], class_of[v]);
            if cu == 1 || cv == 1 || (cu == 2 && cv == 2) {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Sizes of the `K` vertex-disjoint stars covering `V_2`: the balanced
/// partition of `|V_2|` into `K` parts, larger parts first. A star of size
/// `s` has `s` vertices.
pub fn square_star_sizes(n: usize, c: usize, k: usize) -> Vec<usize> {
    graph::turan_class_sizes(n / 3 + c + 1, k)
}

/// Checks the parameter constraints of [`build_square_cx`] without building.
pub fn check_square_params(n: usize, c: usize, k: usize) -> Result<()> {
    ensure_range!(n.is_multiple_of(3) && n > 0, "needs 3 | n, got n={n}");
    ensure_range!(c >= 1 && k >= 1, "needs C >= 1 and K >= 1, got C={c}, K={k}");
    ensure_range!(2 * n / 3 >= c + 2, "needs |V_3| = 2n/3-C-2 >= 0, got n={n}, C={c}");
    let v2 = n / 3 + c + 1;
    ensure_range!(c < k && k <= v2, "needs C < K <= |V_2| = {v2}, got C={c}, K={k}");
    // leaves of degree 2n/3-C must fit below index n/3-2C
    ensure_range!(
        v2 - k + 2 * c < n / 3,
        "needs n/3+C-K+1 <= n/3-2C-1, got n={n}, C={c}, K={k}"
    );
    ensure_range!(
        v2 / k >= 2 * c + 3,
        "needs star centres of degree 2n/3-C-2+floor(|V_2|/K) >= 2n/3+C+1, got n={n}, C={c}, K={k}"
    );
    Ok(())
}

/// Classes `V_1 = {v}`, `V_2` (`n/3+C+1`, split into stars, centre first in
/// each), `V_3` (`2n/3-C-2`). `v` is joined to `V_2`, `V_2` to `V_3`, and
/// `V_3` is a clique. No parameter validation beyond the class sizes; see
/// [`build_square_cx`].
pub fn square_cx_graph(n: usize, c: usize, k: usize) -> Result<Graph> {
    ensure_range!(n.is_multiple_of(3) && n > 0 && 2 * n / 3 >= c + 2, "bad class sizes for n={n}, C={c}");
    ensure_range!(k >= 1 && k <= n / 3 + c + 1, "needs 1 <= K <= |V_2|, got K={k}");
    let v2 = n / 3 + c + 1;
    let v3_start = 1 + v2;
    let mut g = Graph::new(n);
    for u in 1..v3_start {
        g.add_edge(0, u);
        for w in v3_start..n {
            g.add_edge(u, w);
        }
    }
    for u in v3_start..n {
        for w in u + 1..n {
            g.add_edge(u, w);
        }
    }
    let mut start = 1;
    for s in square_star_sizes(n, c, k) {
        for leaf in start + 1..start + s {
            g.add_edge(start, leaf);
        }
        start += s;
    }
    Ok(g)
}

/// [`square_cx_graph`] after checking that the parameters give the degree
/// band `d_i >= n/3 + C + i` for `i <= n/3`.
pub fn build_square_cx(n: usize, c: usize, k: usize) -> Result<Graph> {
    check_square_params(n, c, k)?;
    square_cx_graph(n, c, k)
}

/// Whether an ascending degree sequence satisfies `d_i >= n/3 + C + i` for
/// every `1 <= i <= n/3`.
pub fn square_degree_band_holds(degrees: &[usize], c: usize) -> bool {
    let n = degrees.len();
    (1..=n / 3).all(|i| degrees[i - 1] >= n / 3 + c + i)
}

fn class_index(sizes: &[usize]) -> Vec<usize> {
    sizes
        .iter()
        .enumerate()
        .flat_map(|(c, &s)| std::iter::repeat_n(c, s))
        .collect()
}

/// A construction family together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum ConstructionSpec {
    HMatching { n: usize, d: usize },
    G1 { n: usize, r: usize },
    G2 { n: usize, r: usize, d: usize },
    AfExceptionI { n: usize, r: usize },
    AfExceptionIi { n: usize, r: usize, j: usize },
    Extremal1 { n: usize, r: usize, k: usize },
    TStar { n: usize, r: usize },
    Extremal2 { n: usize, r: usize, k: usize },
    SquareCx { n: usize, c: usize, k: usize },
}

/// The property that makes a construction extremal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Obstruction {
    NoPerfectMatching,
    NoPacking { r: usize },
    NoEquitableColouring { k: usize },
    /// The neighbourhood of `vertex` has no path with three edges.
    NoSquareHamiltonCycle { vertex: usize },
}

/// Properties a construction is claimed to have, derived from formulas.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claims {
    pub edges: usize,
    pub degree_sequence: Vec<usize>,
    pub min_degree: usize,
    pub max_degree: usize,
    pub obstruction: Obstruction,
}

/// Degree bands `(degree, multiplicity)` to an ascending sequence.
fn bands(parts: &[(usize, usize)]) -> Vec<usize> {
    let mut d: Vec<usize> = parts
        .iter()
        .flat_map(|&(deg, count)| std::iter::repeat_n(deg, count))
        .collect();
    d.sort_unstable();
    d
}

fn u(x: usize) -> u64 {
    x as u64
}

impl ConstructionSpec {
    pub fn n(&self) -> usize {
        match *self {
            ConstructionSpec::HMatching { n, .. }
            | ConstructionSpec::G1 { n, .. }
            | ConstructionSpec::G2 { n, .. }
            | ConstructionSpec::AfExceptionI { n, .. }
            | ConstructionSpec::AfExceptionIi { n, .. }
            | ConstructionSpec::Extremal1 { n, .. }
            | ConstructionSpec::TStar { n, .. }
            | ConstructionSpec::Extremal2 { n, .. }
            | ConstructionSpec::SquareCx { n, .. } => n,
        }
    }

    pub fn family(&self) -> &'static str {
        match self {
            ConstructionSpec::HMatching { .. } => "H",
            ConstructionSpec::G1 { .. } => "G1",
            ConstructionSpec::G2 { .. } => "G2",
            ConstructionSpec::AfExceptionI { .. } => "af_i",
            ConstructionSpec::AfExceptionIi { .. } => "af_ii",
            ConstructionSpec::Extremal1 { .. } => "extremal1",
            ConstructionSpec::TStar { .. } => "t_star",
            ConstructionSpec::Extremal2 { .. } => "extremal2",
            ConstructionSpec::SquareCx { .. } => "square_cx",
        }
    }

    pub fn build(&self) -> Result<Graph> {
        match *self {
            ConstructionSpec::HMatching { n, d } => build_h(n, d),
            ConstructionSpec::G1 { n, r } => build_g1(n, r),
            ConstructionSpec::G2 { n, r, d } => build_g2(n, r, d),
            ConstructionSpec::AfExceptionI { n, r } => build_af_exception(n, r, AfVariant::I),
            ConstructionSpec::AfExceptionIi { n, r, j } => build_af_exception(n, r, AfVariant::Ii { j }),
            ConstructionSpec::Extremal1 { n, r, k } => build_extremal1(n, r, k),
            ConstructionSpec::TStar { n, r } => graph::t_star(n, r),
            ConstructionSpec::Extremal2 { n, r, k } => build_extremal2(n, r, k),
            ConstructionSpec::SquareCx { n, c, k } => build_square_cx(n, c, k),
        }
    }

    /// Claimed properties, computed from the degree bands and edge formulas.
    /// Fails on the same parameter ranges as [`ConstructionSpec::build`].
    pub fn claims(&self) -> Result<Claims> {
        // validate parameters through the builder's range checks
        let (edges, degree_sequence, obstruction) = match *self {
            ConstructionSpec::HMatching { n, d } => {
                let edges = thresholds::h(u(n), u(d))? as usize;
                let seq = bands(&[(d, d + 1), (n - 1, d), (n - d - 2, n - 2 * d - 1)]);
                (edges, seq, Obstruction::NoPerfectMatching)
            }
            ConstructionSpec::G1 { n, r } => {
                ensure_range!(r >= 3 && n % r == 0 && n > 0, "G1 needs r >= 3 and r | n");
                let q = n / r;
                let seq = bands(&[(q, q + 1), (0, n - q - 1)]);
                (binom2(q + 1), seq, Obstruction::NoEquitableColouring { k: q })
            }
            ConstructionSpec::G2 { n, r, d } => {
                build_g2_params(n, r, d)?;
                let rest = n - d - 1;
                let cliques = graph::turan_class_sizes(rest, r - 2);
                let edges = d + thresholds::turan_complement_edges(u(rest), u(r - 2))? as usize;
                let mut parts = vec![(d, 1), (1, d)];
                parts.extend(cliques.iter().map(|&s| (s - 1, s)));
                (edges, bands(&parts), Obstruction::NoEquitableColouring { k: n / r })
            }
            ConstructionSpec::AfExceptionI { n, r } => {
                ensure_range!(r >= 2 && n % r == 0 && n >= r, "needs r >= 2 and r | n");
                let q = n / r;
                let seq = bands(&[(n - 1 - q, q + 1), (n - 1, n - q - 1)]);
                (binom2(n) - binom2(q + 1), seq, Obstruction::NoPacking { r })
            }
            ConstructionSpec::AfExceptionIi { n, r, j } => {
                ensure_range!(r >= 3 && n % r == 0 && n >= 2 * r, "needs r >= 3, r | n, n >= 2r");
                ensure_range!(j >= 1 && j + 2 <= r, "needs 1 <= j <= r-2");
                let leaves = n - r - j + 1;
                let seq = bands(&[(r + j - 2, 1), (n - 2, leaves + 2 * j), (n - 1, r - j - 2)]);
                (binom2(n) - (n - r + 1), seq, Obstruction::NoPacking { r })
            }
            ConstructionSpec::Extremal1 { n, r, k } => {
                ensure_range!(r >= 2 && n % r == 0 && n > 0 && k >= 1 && k < n / r, "bad extremal1 parameters");
                let q = n / r;
                let seq = bands(&[
                    ((r - 2) * q + k - 1, k),
                    ((r - 1) * q, (r - 2) * q),
                    (n - k - 1, 2 * q - 2 * k + 1),
                    (n - 1, k - 1),
                ]);
                (seq.iter().sum::<usize>() / 2, seq, Obstruction::NoPacking { r })
            }
            ConstructionSpec::TStar { n, r } => {
                ensure_range!(r >= 2 && n % r == 0 && n >= r, "needs r >= 2 and r | n");
                let q = n / r;
                let sizes: Vec<usize> = std::iter::repeat_n(q, r - 2).chain([q - 1, q + 1]).collect();
                let edges = binom2(n) - sizes.iter().map(|&s| binom2(s)).sum::<usize>();
                let seq = bands(&sizes.iter().map(|&s| (n - s, s)).collect::<Vec<_>>());
                (edges, seq, Obstruction::NoPacking { r })
            }
            ConstructionSpec::Extremal2 { n, r, k } => {
                ensure_range!(r >= 2 && n % r == 0 && n > 0 && k >= 1 && k <= n / r, "bad extremal2 parameters");
                let seq = bands(&[
                    ((r - 1) * k - 1, k),
                    (n - k - 1, n - r * k + 1),
                    (n - 1, (r - 1) * k - 1),
                ]);
                (seq.iter().sum::<usize>() / 2, seq, Obstruction::NoPacking { r })
            }
            ConstructionSpec::SquareCx { n, c, k } => {
                check_square_params(n, c, k)?;
                let v2 = n / 3 + c + 1;
                let v3 = n - 1 - v2;
                let mut parts = vec![(v2, 1), (n - 2, v3)];
                for s in square_star_sizes(n, c, k) {
                    if s == 1 {
                        parts.push((1 + v3, 1));
                    } else {
                        parts.push((v3 + s, 1));
                        parts.push((v3 + 2, s - 1));
                    }
                }
                let seq = bands(&parts);
                (seq.iter().sum::<usize>() / 2, seq, Obstruction::NoSquareHamiltonCycle { vertex: 0 })
            }
        };
        Ok(Claims {
            edges,
            min_degree: degree_sequence.first().copied().unwrap_or(0),
            max_degree: degree_sequence.last().copied().unwrap_or(0),
            degree_sequence,
            obstruction,
        })
    }

    /// Every valid parameter combination of every family with `n <= max_n`.
    pub fn sweep(max_n: usize) -> Vec<ConstructionSpec> {
        let mut out = Vec::new();
        for n in 1..=max_n {
            if n % 2 == 0 {
                out.extend((0..n / 2).map(|d| ConstructionSpec::HMatching { n, d }));
            }
            for r in (2..=n).filter(|r| n % r == 0) {
                let q = n / r;
                out.push(ConstructionSpec::AfExceptionI { n, r });
                out.push(ConstructionSpec::TStar { n, r });
                out.extend((1..q).map(|k| ConstructionSpec::Extremal1 { n, r, k }));
                out.extend((1..=q).map(|k| ConstructionSpec::Extremal2 { n, r, k }));
                if r >= 3 {
                    out.push(ConstructionSpec::G1 { n, r });
                    if q >= 2 {
                        let lo = n.div_ceil(r - 1);
                        out.extend((lo..=n - r).map(|d| ConstructionSpec::G2 { n, r, d }));
                        out.extend((1..=r - 2).map(|j| ConstructionSpec::AfExceptionIi { n, r, j }));
                    }
                }
            }
            if n % 3 == 0 {
                for c in 1..=n {
                    for k in c + 1..=n / 3 + c + 1 {
                        if check_square_params(n, c, k).is_ok() {
                            out.push(ConstructionSpec::SquareCx { n, c, k });
                        }
                    }
                }
            }
        }
        out
    }
}

fn build_g2_params(n: usize, r: usize, d: usize) -> Result<()> {
    ensure_range!(r >= 3 && n.is_multiple_of(r) && n >= 2 * r, "G2 needs r >= 3 and n = kr, k >= 2");
    ensure_range!(d * (r - 1) >= n && d + r <= n, "G2 needs n/(r-1) <= D <= n-r");
    Ok(())
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ConstructionSpec::HMatching { n, d } => write!(f, "H(n={n}, d={d})"),
            ConstructionSpec::G1 { n, r } => write!(f, "G1(n={n}, r={r})"),
            ConstructionSpec::G2 { n, r, d } => write!(f, "G2(n={n}, r={r}, D={d})"),
            ConstructionSpec::AfExceptionI { n, r } => write!(f, "af_i(n={n}, r={r})"),
            ConstructionSpec::AfExceptionIi { n, r, j } => write!(f, "af_ii(n={n}, r={r}, j={j})"),
            ConstructionSpec::Extremal1 { n, r, k } => write!(f, "extremal1(n={n}, r={r}, k={k})"),
            ConstructionSpec::TStar { n, r } => write!(f, "t_star(n={n}, r={r})"),
            ConstructionSpec::Extremal2 { n, r, k } => write!(f, "extremal2(n={n}, r={r}, k={k})"),
            ConstructionSpec::SquareCx { n, c, k } => write!(f, "square_cx(n={n}, C={c}, K={k})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::{equitable_colouring, perfect_kr_packing, perfect_matching, SolveOptions};

    fn packs(g: &Graph, r: usize) -> bool {
        perfect_kr_packing(g, r, &SolveOptions::default()).unwrap().decision
    }

    fn colours(g: &Graph, k: usize) -> bool {
        equitable_colouring(g, k, &SolveOptions::default()).unwrap().decision
    }

    #[test]
    fn h_examples() {
        let g = build_h(6, 2).unwrap();
        assert_eq!(g.edge_count(), 9);
        assert_eq!(g.degree_sequence(), vec![2, 2, 2, 2, 5, 5]);
        assert!(!perfect_matching(&g).decision);
        let g = build_h(4, 1).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.degree_sequence(), vec![1, 1, 1, 3]);
        let g = build_h(6, 0).unwrap();
        assert_eq!(g.edge_count(), 10);
        assert_eq!(g.degree(0), 0);
        assert!(build_h(6, 3).is_err());
    }

    #[test]
    fn g1_examples() {
        let g = build_g1(6, 3).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(!colours(&g, 2));
        let g = build_g1(9, 3).unwrap();
        assert_eq!((g.edge_count(), g.max_degree()), (6, 3));
        assert_eq!(build_g1(12, 4).unwrap().edge_count(), 6);
        assert!(build_g1(6, 2).is_err());
    }

    #[test]
    fn g2_examples() {
        let g = build_g2(24, 3, 21).unwrap();
        assert_eq!(g.edge_count(), 22);
        assert_eq!(g.edge_count() as u64, thresholds::f(24, 3, 21).unwrap().value);
        let g = build_g2(12, 3, 8).unwrap();
        assert_eq!(g.edge_count(), 11);
        assert!(!colours(&g, 4));
        let g = build_g2(12, 3, 6).unwrap();
        assert_eq!(g.max_degree(), 6);
        assert_eq!(g.edge_count(), 16);
        assert!(build_g2(12, 3, 5).is_err());
        assert!(build_g2(12, 3, 10).is_err());
    }

    #[test]
    fn af_exception_examples() {
        let g = build_af_exception(6, 3, AfVariant::I).unwrap();
        assert_eq!(g, build_g1(6, 3).unwrap().complement());
        assert!(!packs(&g, 3));

        let g = build_af_exception(8, 4, AfVariant::Ii { j: 1 }).unwrap();
        let c = g.complement();
        assert_eq!(c.edge_count(), 5);
        assert_eq!(c.degree_sequence(), vec![0, 1, 1, 1, 1, 1, 1, 4]);
        assert!(!packs(&g, 4));

        let c = build_af_exception(8, 4, AfVariant::Ii { j: 2 }).unwrap().complement();
        assert_eq!(c.n(), 8);
        assert_eq!(c.degree_sequence(), vec![1, 1, 1, 1, 1, 1, 1, 3]);
        assert!(build_af_exception(8, 4, AfVariant::Ii { j: 3 }).is_err());
    }

    #[test]
    fn extremal1_examples() {
        let g = build_extremal1(6, 3, 1).unwrap();
        assert_eq!(g.degree_sequence(), vec![2, 4, 4, 4, 4, 4]);
        // V_0 = {0} lies in no triangle
        assert!(!crate::solvers::vertex_in_clique(&g, 0, 3));
        for (n, r, k) in [(6, 3, 1), (9, 3, 1), (9, 3, 2), (12, 3, 3)] {
            assert!(!packs(&build_extremal1(n, r, k).unwrap(), r), "({n},{r},{k})");
        }
        let g = build_extremal1(8, 2, 3).unwrap();
        // r = 2: bands k x (k-1), 2n/r-2k+1 x (n-k-1), k-1 x (n-1)
        assert_eq!(g.degree_sequence(), vec![2, 2, 2, 4, 4, 4, 7, 7]);
        assert!(!perfect_matching(&g).decision);
    }

    #[test]
    fn extremal2_examples() {
        let g = build_extremal2(6, 3, 1).unwrap();
        assert_eq!(g.degree_sequence(), vec![1, 4, 4, 4, 4, 5]);
        assert!(!packs(&build_extremal2(9, 3, 2).unwrap(), 3));
        let g = build_extremal2(12, 4, 2).unwrap();
        assert_eq!(g.degree_sequence(), [vec![5; 2], vec![9; 5], vec![11; 5]].concat());
    }

    #[test]
    fn square_cx_examples() {
        // smallest n with C = 1: K = 5 stars of 5 vertices on |V_2| = 25
        let g = build_square_cx(69, 1, 5).unwrap();
        assert_eq!(g.degree(0), 69 / 3 + 1 + 1);
        assert!((26..69).all(|x| g.degree(x) == 67));
        assert!(square_degree_band_holds(&g.degree_sequence(), 1));
        assert!(crate::solvers::square_necessary_condition(&g).contains(&0));
        assert!(build_square_cx(66, 1, 5).is_err());
    }

    #[test]
    fn square_cx_at_24_misses_the_degree_band() {
        assert_eq!(square_star_sizes(24, 1, 4), vec![3, 3, 2, 2]);
        assert!(build_square_cx(24, 1, 4).is_err());
        let g = square_cx_graph(24, 1, 4).unwrap();
        let d = g.degree_sequence();
        // d_7 = 15 < 8 + 1 + 7
        assert_eq!(d[6], 15);
        assert!(!square_degree_band_holds(&d, 1));
        assert!(crate::solvers::square_necessary_condition(&g).contains(&0));
    }

    #[test]
    fn claims_match_builds_on_small_sweep() {
        for spec in ConstructionSpec::sweep(30) {
            let g = spec.build().unwrap();
            let claims = spec.claims().unwrap();
            assert_eq!(g.edge_count(), claims.edges, "{spec}");
            assert_eq!(g.degree_sequence(), claims.degree_sequence, "{spec}");
        }
    }
}
