//! Coxeter graphs for the finite and affine irreducible types, plus a
//! constructor for arbitrary user-supplied Coxeter matrices.
//!
//! A Coxeter graph is stored as a full symmetric bond matrix `m(s,t)` over a
//! fixed, documented generator ordering. Off-diagonal entries are finite
//! integers `>= 2` or infinity; `m(s,t) = 2` means the generators commute and
//! `m(s,t) >= 3` means they are adjacent in the diagram.
//!
//! Generator orderings (index = position in the matrix):
//!
//! * `A:n` (n >= 2) — `s1 .. s{n-1}`, a path with all bonds 3.
//! * `Atilde:n` (n >= 3) — `s0 .. s{n-1}`, a cycle with all bonds 3.
//! * `B:n` (n >= 2) — `t, s1 .. s{n-1}` with `m(t,s1) = 4`.
//! * `D:m` (m >= 3) — `t1, t2, s1 .. s{m-2}`, both `t`s bonded 3 to `s1`.
//! * `I2:m` (m >= 3) — `s1, s2` with bond `m`.
//! * `Ctilde:n` (n >= 2) — `t, s1 .. s{n-1}, u` with `m(t,s1) = m(s{n-1},u) = 4`;
//!   indices are `t = 0`, `si = i`, `u = n`.
//! * `Btilde:m` (m >= 3) — `t1, t2, s1 .. s{m-2}, u` with `m(s{m-2},u) = 4`.
//! * `Dtilde:m` (m >= 4) — `t1, t2, s1 .. s{m-3}, u1, u2`.
//! * `G2tilde` — `t, s, u` with `m(t,s) = 3`, `m(s,u) = 6`.
//! * `F4tilde` — `s0 .. s4`, a path with bonds `3,3,4,3`.
//! * `H3`, `H4`, `F4`, `E6`, `E7`, `E8`, `E6tilde`, `E7tilde`, `E8tilde` — fixed
//!   diagrams, see [`build_graph`].

use std::fmt;

use thiserror::Error;

/// Index of a generator inside its owning [`CoxeterGraph`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Gen(pub u8);

impl Gen {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A bond label `m(s,t)` between two distinct generators.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Bond {
    Finite(u32),
    Infinite,
}

impl Bond {
    /// True when the two generators are adjacent in the diagram (bond >= 3).
    pub fn is_edge(self) -> bool {
        match self {
            Bond::Finite(m) => m >= 3,
            Bond::Infinite => true,
        }
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Bond::Finite(m) => Some(m),
            Bond::Infinite => None,
        }
    }
}

impl fmt::Display for Bond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bond::Finite(m) => write!(f, "{m}"),
            Bond::Infinite => write!(f, "inf"),
        }
    }
}

/// The supported standard type families.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    A,
    B,
    D,
    I2,
    H3,
    H4,
    F4,
    E6,
    E7,
    E8,
    ATilde,
    BTilde,
    CTilde,
    DTilde,
    F4Tilde,
    G2Tilde,
    E6Tilde,
    E7Tilde,
    E8Tilde,
}

impl Family {
    /// Families whose diagram has a fixed vertex count (no rank parameter).
    pub fn is_fixed_rank(self) -> bool {
        !matches!(
            self,
            Family::A
                | Family::B
                | Family::D
                | Family::I2
                | Family::ATilde
                | Family::BTilde
                | Family::CTilde
                | Family::DTilde
        )
    }

    fn token(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::D => "D",
            Family::I2 => "I2",
            Family::H3 => "H3",
            Family::H4 => "H4",
            Family::F4 => "F4",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
            Family::ATilde => "Atilde",
            Family::BTilde => "Btilde",
            Family::CTilde => "Ctilde",
            Family::DTilde => "Dtilde",
            Family::F4Tilde => "F4tilde",
            Family::G2Tilde => "G2tilde",
            Family::E6Tilde => "E6tilde",
            Family::E7Tilde => "E7tilde",
            Family::E8Tilde => "E8tilde",
        }
    }
}

/// A standard type together with its rank parameter.
///
/// The rank parameter follows the subscript conventions of the diagrams:
/// `A:n` is the group A_{n-1} on `n-1` generators, `Atilde:n` is the affine
/// group on `n` generators, while `B:n`, `D:m`, `Ctilde:n`, `Btilde:m`,
/// `Dtilde:m` and `I2:m` use the subscript itself. Fixed-rank families carry
/// no parameter and are written bare (`"H3"`, `"E8tilde"`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct TypeSpec {
    pub family: Family,
    pub rank: u32,
}

#[derive(Error, Clone, PartialEq, Eq, Debug)]
pub enum GraphError {
    #[error("rank {rank} out of range for family {family}: {reason}")]
    RankOutOfRange {
        family: String,
        rank: u32,
        reason: &'static str,
    },
    #[error("cannot parse type spec {0:?}: expected e.g. \"A:4\", \"Ctilde:3\", \"I2:7\" or \"H3\"")]
    ParseSpec(String),
    #[error("invalid Coxeter matrix: {0}")]
    BadMatrix(String),
}

impl TypeSpec {
    pub fn new(family: Family, rank: u32) -> TypeSpec {
        TypeSpec { family, rank }
    }

    /// Parse a spec string of the form `"A:4"`, `"Ctilde:3"`, `"I2:7"`;
    /// fixed-rank families are written without a parameter (`"H3"`).
    pub fn parse(s: &str) -> Result<TypeSpec, GraphError> {
        let bad = || GraphError::ParseSpec(s.to_string());
        let (fam_str, rank_str) = match s.split_once(':') {
            Some((f, r)) => (f, Some(r)),
            None => (s, None),
        };
        let family = [
            Family::A,
            Family::B,
            Family::D,
            Family::I2,
            Family::H3,
            Family::H4,
            Family::F4,
            Family::E6,
            Family::E7,
            Family::E8,
            Family::ATilde,
            Family::BTilde,
            Family::CTilde,
            Family::DTilde,
            Family::F4Tilde,
            Family::G2Tilde,
            Family::E6Tilde,
            Family::E7Tilde,
            Family::E8Tilde,
        ]
        .into_iter()
        .find(|f| f.token().eq_ignore_ascii_case(fam_str))
        .ok_or_else(bad)?;
        let rank = match rank_str {
            Some(r) => r.trim().parse::<u32>().map_err(|_| bad())?,
            None if family.is_fixed_rank() => 0,
            None => return Err(bad()),
        };
        if family.is_fixed_rank() && rank_str.is_some() {
            return Err(bad());
        }
        Ok(TypeSpec { family, rank })
    }
}

impl fmt::Display for TypeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family.is_fixed_rank() {
            write!(f, "{}", self.family.token())
        } else {
            write!(f, "{}:{}", self.family.token(), self.rank)
        }
    }
}

/// A Coxeter graph: named generators plus a symmetric bond matrix.
///
/// Immutable after construction and freely shareable across threads.
#[derive(Clone, Debug)]
pub struct CoxeterGraph {
    names: Vec<String>,
    bonds: Vec<Vec<Bond>>,
    type_tag: Option<TypeSpec>,
}

impl CoxeterGraph {
    /// Build the graph from an arbitrary symmetric Coxeter matrix. The
    /// diagonal is ignored; off-diagonal entries must be `>= 2` and symmetric.
    pub fn from_matrix(names: Vec<String>, bonds: Vec<Vec<Bond>>) -> Result<CoxeterGraph, GraphError> {
        let n = names.len();
        if bonds.len() != n || bonds.iter().any(|row| row.len() != n) {
            return Err(GraphError::BadMatrix(format!(
                "matrix must be {n}x{n} to match the generator list"
            )));
        }
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                if bonds[i][j] != bonds[j][i] {
                    return Err(GraphError::BadMatrix(format!(
                        "m({},{}) != m({},{})",
                        names[i], names[j], names[j], names[i]
                    )));
                }
                if let Bond::Finite(m) = bonds[i][j] {
                    if m < 2 {
                        return Err(GraphError::BadMatrix(format!(
                            "m({},{}) = {m} < 2",
                            names[i], names[j]
                        )));
                    }
                }
            }
        }
        Ok(CoxeterGraph {
            names,
            bonds,
            type_tag: None,
        })
    }

    /// Path/cycle/star builder used by [`build_graph`]: starts from the
    /// all-commuting matrix and installs the listed edges.
    fn from_edges(names: Vec<&str>, edges: &[(usize, usize, u32)], tag: TypeSpec) -> CoxeterGraph {
        let n = names.len();
        let mut bonds = vec![vec![Bond::Finite(2); n]; n];
        for (i, row) in bonds.iter_mut().enumerate() {
            row[i] = Bond::Finite(1);
        }
        for &(a, b, m) in edges {
            debug_assert!(a != b && m >= 3);
            bonds[a][b] = Bond::Finite(m);
            bonds[b][a] = Bond::Finite(m);
        }
        CoxeterGraph {
            names: names.into_iter().map(str::to_string).collect(),
            bonds,
            type_tag: Some(tag),
        }
    }

    pub fn generator_count(&self) -> usize {
        self.names.len()
    }

    pub fn generators(&self) -> impl Iterator<Item = Gen> {
        (0..self.names.len() as u8).map(Gen)
    }

    pub fn gen_name(&self, g: Gen) -> &str {
        &self.names[g.index()]
    }

    pub fn gen_by_name(&self, name: &str) -> Option<Gen> {
        self.names.iter().position(|n| n == name).map(|i| Gen(i as u8))
    }

    /// The bond `m(s,t)` for two distinct generators of the graph.
    pub fn bond(&self, s: Gen, t: Gen) -> Bond {
        assert!(s != t, "bond(s,s) is not a bond query");
        self.bonds[s.index()][t.index()]
    }

    pub fn are_adjacent(&self, s: Gen, t: Gen) -> bool {
        s != t && self.bond(s, t).is_edge()
    }

    /// All diagram edges `(s, t, m)` with `s < t`.
    pub fn edges(&self) -> Vec<(Gen, Gen, Bond)> {
        let mut out = Vec::new();
        for i in 0..self.names.len() {
            for j in i + 1..self.names.len() {
                let b = self.bonds[i][j];
                if b.is_edge() {
                    out.push((Gen(i as u8), Gen(j as u8), b));
                }
            }
        }
        out
    }

    pub fn type_tag(&self) -> Option<TypeSpec> {
        self.type_tag
    }

    /// True when the generators, in index order, form a simple path
    /// (consecutive indices adjacent, nothing else). This is the shape the
    /// walk encoding of alternating heaps requires.
    pub fn is_linear_path(&self) -> bool {
        let n = self.names.len();
        for i in 0..n {
            for j in i + 1..n {
                let edge = self.bonds[i][j].is_edge();
                if edge != (j == i + 1) {
                    return false;
                }
            }
        }
        true
    }
}

fn rank_err(spec: TypeSpec, reason: &'static str) -> GraphError {
    GraphError::RankOutOfRange {
        family: spec.family.token().to_string(),
        rank: spec.rank,
        reason,
    }
}

/// Build the standard Coxeter graph for a type spec.
pub fn build_graph(spec: TypeSpec) -> Result<CoxeterGraph, GraphError> {
    let n = spec.rank as usize;
    let g = match spec.family {
        Family::A => {
            if n < 2 {
                return Err(rank_err(spec, "A:n needs n >= 2"));
            }
            let names: Vec<String> = (1..n).map(|i| format!("s{i}")).collect();
            let edges: Vec<(usize, usize, u32)> = (0..n.saturating_sub(2)).map(|i| (i, i + 1, 3)).collect();
            CoxeterGraph::from_edges(names.iter().map(String::as_str).collect(), &edges, spec)
        }
        Family::ATilde => {
            if n < 3 {
                return Err(rank_err(spec, "Atilde:n needs n >= 3"));
            }
            let names: Vec<String> = (0..n).map(|i| format!("s{i}")).collect();
            let mut edges: Vec<(usize, usize, u32)> = (0..n - 1).map(|i| (i, i + 1, 3)).collect();
            edges.push((0, n - 1, 3));
            CoxeterGraph::from_edges(names.iter().map(String::as_str).collect(), &edges, spec)
        }
        Family::B => {
            if n < 2 {
                return Err(rank_err(spec, "B:n needs n >= 2"));
            }
            let mut names = vec!["t".to_string()];
            names.extend((1..n).map(|i| format!("s{i}")));
            let mut edges = vec![(0, 1, 4)];
            edges.extend((1..n - 1).map(|i| (i, i + 1, 3)));
            CoxeterGraph::from_edges(names.iter().map(String::as_str).collect(), &edges, spec)
        }
        Family::D => {
            if n < 3 {
                return Err(rank_err(spec, "D:m needs m >= 3"));
            }
            let mut names = vec!["t1".to_string(), "t2".to_string()];
            names.extend((1..n - 1).map(|i| format!("s{i}")));
            let mut edges = vec![(0, 2, 3), (1, 2, 3)];
            edges.extend((2..n - 1).map(|i| (i, i + 1, 3)));
            CoxeterGraph::from_edges(names.iter().map(String::as_str).collect(), &edges, spec)
        }
        Family::I2 => {
            if n < 3 {
                return Err(rank_err(spec, "I2:m needs m >= 3"));
            }
            CoxeterGraph::from_edges(vec!["s1", "s2"], &[(0, 1, spec.rank)], spec)
        }
        Family::H3 => CoxeterGraph::from_edges(vec!["s1", "s2", "s3"], &[(0, 1, 5), (1, 2, 3)], spec),
        Family::H4 => CoxeterGraph::from_edges(
            vec!["s1", "s2", "s3", "s4"],
            &[(0, 1, 5), (1, 2, 3), (2, 3, 3)],
            spec,
        ),
        Family::F4 => CoxeterGraph::from_edges(
            vec!["s1", "s2", "s3", "s4"],
            &[(0, 1, 3), (1, 2, 4), (2, 3, 3)],
            spec,
        ),
        // E-series in Bourbaki numbering: a path s1,s3,s4,...,sn with s2
        // attached to s4.
        Family::E6 => CoxeterGraph::from_edges(
            vec!["s1", "s2", "s3", "s4", "s5", "s6"],
            &[(0, 2, 3), (2, 3, 3), (3, 4, 3), (4, 5, 3), (1, 3, 3)],
            spec,
        ),
        Family::E7 => CoxeterGraph::from_edges(
            vec!["s1", "s2", "s3", "s4", "s5", "s6", "s7"],
            &[(0, 2, 3), (2, 3, 3), (3, 4, 3), (4, 5, 3), (5, 6, 3), (1, 3, 3)],
            spec,
        ),
        Family::E8 => CoxeterGraph::from_edges(
            vec!["s1", "s2", "s3", "s4", "s5", "s6", "s7", "s8"],
            &[
                (0, 2, 3),
                (2, 3, 3),
                (3, 4, 3),
                (4, 5, 3),
                (5, 6, 3),
                (6, 7, 3),
                (1, 3, 3),
            ],
            spec,
        ),
        Family::CTilde => {
            if n < 2 {
                return Err(rank_err(spec, "Ctilde:n needs n >= 2"));
            }
            let mut names = vec!["t".to_string()];
            names.extend((1..n).map(|i| format!("s{i}")));
            names.push("u".to_string());
            let mut edges = vec![(0, 1, 4), (n - 1, n, 4)];
            edges.extend((1..n - 1).map(|i| (i, i + 1, 3)));
            CoxeterGraph::from_edges(names.iter().map(String::as_str).collect(), &edges, spec)
        }
        Family::BTilde => {
            // Btilde:m on m+1 generators; the underlying parameter is n = m-1.
            if n < 3 {
                return Err(rank_err(spec, "Btilde:m needs m >= 3"));
            }
            let np = n - 1;
            let mut names = vec!["t1".to_string(), "t2".to_string()];
            names.extend((1..np).map(|i| format!("s{i}")));
            names.push("u".to_string());
            let mut edges = vec![(0, 2, 3), (1, 2, 3), (np, np + 1, 4)];
            edges.extend((2..np).map(|i| (i, i + 1, 3)));
            CoxeterGraph::from_edges(names.iter().map(String::as_str).collect(), &edges, spec)
        }
        Family::DTilde => {
            // Dtilde:m on m+1 generators; the underlying parameter is n = m-2.
            if n < 4 {
                return Err(rank_err(spec, "Dtilde:m needs m >= 4"));
            }
            let np = n - 2;
            let mut names = vec!["t1".to_string(), "t2".to_string()];
            names.extend((1..np).map(|i| format!("s{i}")));
            names.push("u1".to_string());
            names.push("u2".to_string());
            let mut edges = vec![(0, 2, 3), (1, 2, 3), (np, np + 1, 3), (np, np + 2, 3)];
            edges.extend((2..np).map(|i| (i, i + 1, 3)));
            CoxeterGraph::from_edges(names.iter().map(String::as_str).collect(), &edges, spec)
        }
        Family::F4Tilde => CoxeterGraph::from_edges(
            vec!["s0", "s1", "s2", "s3", "s4"],
            &[(0, 1, 3), (1, 2, 3), (2, 3, 4), (3, 4, 3)],
            spec,
        ),
        Family::G2Tilde => CoxeterGraph::from_edges(vec!["t", "s", "u"], &[(0, 1, 3), (1, 2, 6)], spec),
        Family::E6Tilde => CoxeterGraph::from_edges(
            vec!["s0", "s1", "s2", "s3", "s4", "s5", "s6"],
            &[
                (1, 3, 3),
                (3, 4, 3),
                (4, 5, 3),
                (5, 6, 3),
                (2, 4, 3),
                (0, 2, 3),
            ],
            spec,
        ),
        Family::E7Tilde => CoxeterGraph::from_edges(
            vec!["s0", "s1", "s2", "s3", "s4", "s5", "s6", "s7"],
            &[
                (1, 3, 3),
                (3, 4, 3),
                (4, 5, 3),
                (5, 6, 3),
                (6, 7, 3),
                (2, 4, 3),
                (0, 1, 3),
            ],
            spec,
        ),
        Family::E8Tilde => CoxeterGraph::from_edges(
            vec!["s0", "s1", "s2", "s3", "s4", "s5", "s6", "s7", "s8"],
            &[
                (1, 3, 3),
                (3, 4, 3),
                (4, 5, 3),
                (5, 6, 3),
                (6, 7, 3),
                (7, 8, 3),
                (2, 4, 3),
                (0, 8, 3),
            ],
            spec,
        ),
    };
    Ok(g)
}

// Indices into the Ctilde:n generator ordering (t, s1..s{n-1}, u): these are
// shared by the walk encoding and the family classifier.
impl CoxeterGraph {
    /// For a `Ctilde:n` graph, the underlying parameter n (generator count - 1).
    pub fn ctilde_param(&self) -> Option<usize> {
        match self.type_tag {
            Some(TypeSpec {
                family: Family::CTilde,
                rank,
            }) => Some(rank as usize),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(spec: &str) -> CoxeterGraph {
        build_graph(TypeSpec::parse(spec).unwrap()).unwrap()
    }

    #[test]
    fn standard_generator_counts() {
        assert_eq!(g("A:3").generator_count(), 2);
        assert_eq!(g("Atilde:4").generator_count(), 4);
        assert_eq!(g("B:3").generator_count(), 3);
        assert_eq!(g("D:4").generator_count(), 4);
        // Ctilde:n has n+1 generators, Btilde:m and Dtilde:m have m+1.
        for n in 2..=6 {
            assert_eq!(g(&format!("Ctilde:{n}")).generator_count(), n + 1);
        }
        for m in 3..=6 {
            assert_eq!(g(&format!("Btilde:{m}")).generator_count(), m + 1);
        }
        for m in 4..=6 {
            assert_eq!(g(&format!("Dtilde:{m}")).generator_count(), m + 1);
        }
        assert_eq!(g("H3").generator_count(), 3);
        assert_eq!(g("F4tilde").generator_count(), 5);
        assert_eq!(g("G2tilde").generator_count(), 3);
        assert_eq!(g("E6tilde").generator_count(), 7);
        assert_eq!(g("E7tilde").generator_count(), 8);
        assert_eq!(g("E8tilde").generator_count(), 9);
    }

    #[test]
    fn cited_bond_values() {
        // build_graph(A, n=3) -> s1, s2 with m(s1,s2) = 3
        let a3 = g("A:3");
        assert_eq!(a3.bond(Gen(0), Gen(1)), Bond::Finite(3));
        // I2(3) is the same graph as A:3
        let i23 = g("I2:3");
        assert_eq!(i23.bond(Gen(0), Gen(1)), Bond::Finite(3));
        // Ctilde:2 -> t, s1, u with m(t,s1) = m(s1,u) = 4 and m(t,u) = 2
        let c2 = g("Ctilde:2");
        let t = c2.gen_by_name("t").unwrap();
        let s1 = c2.gen_by_name("s1").unwrap();
        let u = c2.gen_by_name("u").unwrap();
        assert_eq!(c2.bond(t, s1), Bond::Finite(4));
        assert_eq!(c2.bond(s1, u), Bond::Finite(4));
        assert_eq!(c2.bond(t, u), Bond::Finite(2));
        // A:4: s1 and s3 are non-adjacent in the path
        let a4 = g("A:4");
        assert_eq!(a4.bond(Gen(0), Gen(2)), Bond::Finite(2));
        // G2tilde: m(s,u) = 6
        let g2 = g("G2tilde");
        let s = g2.gen_by_name("s").unwrap();
        let u = g2.gen_by_name("u").unwrap();
        assert_eq!(g2.bond(s, u), Bond::Finite(6));
    }

    #[test]
    fn bond_is_symmetric_for_all_specs() {
        let mut specs: Vec<String> = Vec::new();
        for n in 2..=12 {
            specs.push(format!("A:{n}"));
            specs.push(format!("B:{n}"));
            specs.push(format!("Ctilde:{n}"));
        }
        for n in 3..=12 {
            specs.push(format!("Atilde:{n}"));
            specs.push(format!("D:{n}"));
            specs.push(format!("Btilde:{n}"));
            specs.push(format!("I2:{n}"));
        }
        for n in 4..=12 {
            specs.push(format!("Dtilde:{n}"));
        }
        for f in ["H3", "H4", "F4", "E6", "E7", "E8", "F4tilde", "G2tilde", "E6tilde", "E7tilde", "E8tilde"] {
            specs.push(f.to_string());
        }
        for s in specs {
            let graph = g(&s);
            for a in graph.generators() {
                for b in graph.generators() {
                    if a != b {
                        assert_eq!(graph.bond(a, b), graph.bond(b, a), "asymmetric bond in {s}");
                    }
                }
            }
        }
    }

    #[test]
    fn rank_range_errors() {
        assert!(build_graph(TypeSpec::parse("Atilde:2").unwrap()).is_err());
        assert!(build_graph(TypeSpec::parse("Ctilde:1").unwrap()).is_err());
        assert!(build_graph(TypeSpec::parse("B:1").unwrap()).is_err());
        assert!(build_graph(TypeSpec::parse("D:2").unwrap()).is_err());
        assert!(build_graph(TypeSpec::parse("I2:2").unwrap()).is_err());
        assert!(build_graph(TypeSpec::parse("Dtilde:3").unwrap()).is_err());
    }

    #[test]
    fn spec_parsing_round_trip() {
        for s in ["A:4", "Ctilde:3", "I2:7", "H3", "E8tilde", "Btilde:5"] {
            let spec = TypeSpec::parse(s).unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!(TypeSpec::parse("H3:3").is_err());
        assert!(TypeSpec::parse("A").is_err());
        assert!(TypeSpec::parse("Z:4").is_err());
        assert!(TypeSpec::parse("A:x").is_err());
    }

    #[test]
    fn custom_matrix_validation() {
        let names = vec!["a".to_string(), "b".to_string()];
        let ok = CoxeterGraph::from_matrix(
            names.clone(),
            vec![
                vec![Bond::Finite(1), Bond::Infinite],
                vec![Bond::Infinite, Bond::Finite(1)],
            ],
        );
        assert!(ok.is_ok());
        let bad = CoxeterGraph::from_matrix(
            names,
            vec![
                vec![Bond::Finite(1), Bond::Finite(3)],
                vec![Bond::Finite(4), Bond::Finite(1)],
            ],
        );
        assert!(bad.is_err());
    }

    #[test]
    fn linear_path_detection() {
        assert!(g("Ctilde:3").is_linear_path());
        assert!(g("B:4").is_linear_path());
        assert!(g("H4").is_linear_path());
        assert!(!g("Atilde:4").is_linear_path());
        assert!(!g("D:4").is_linear_path());
        assert!(!g("E6").is_linear_path());
    }
}
