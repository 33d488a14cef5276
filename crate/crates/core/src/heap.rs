//! Words, heaps of pieces, linear extensions, canonical forms, and the full
//! commutativity / alternation predicates.
//!
//! A heap is the labeled poset of a commutation class of words: position `i`
//! lies below position `j` when `i < j` in the word and the letters are equal
//! or adjacent in the Coxeter graph, closed transitively. Two words are in the
//! same commutation class exactly when their heaps are isomorphic, and the
//! linear extensions of the heap recover the whole class.
//!
//! The poset order is stored as one strict down-set bitmask per element;
//! element ids are assigned in construction order, so the label sequence read
//! in id order is itself a linear extension (the witness word).

use std::fmt;

use thiserror::Error;

use crate::graph::{Bond, CoxeterGraph, Gen};

/// A word over the generators of a Coxeter graph.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Word {
    pub letters: Vec<Gen>,
}

impl Word {
    pub fn new(letters: Vec<Gen>) -> Word {
        Word { letters }
    }

    pub fn empty() -> Word {
        Word { letters: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Parse whitespace-separated generator display names ("t s1 u s1 t").
    pub fn parse(graph: &CoxeterGraph, text: &str) -> Result<Word, HeapError> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let g = graph
                .gen_by_name(tok)
                .ok_or_else(|| HeapError::UnknownGenerator(tok.to_string()))?;
            letters.push(g);
        }
        Ok(Word { letters })
    }

    pub fn display<'a>(&'a self, graph: &'a CoxeterGraph) -> WordDisplay<'a> {
        WordDisplay { word: self, graph }
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    graph: &'a CoxeterGraph,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &g) in self.word.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", self.graph.gen_name(g))?;
        }
        Ok(())
    }
}

#[derive(Error, Clone, PartialEq, Eq, Debug)]
pub enum HeapError {
    #[error("unknown generator name {0:?}")]
    UnknownGenerator(String),
    #[error("the selected elements do not form a chain")]
    NotAChain,
}

/// A finite labeled poset representing one commutation class.
///
/// The strict down-sets are kept as one flat bit matrix (row `i` = the set of
/// elements below element `i`). Element ids are assigned in construction
/// order, which is itself a linear extension; in particular the elements of
/// any chain appear in id order.
///
/// Immutable once built; all operations are pure.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Heap {
    labels: Vec<Gen>,
    words_per_row: usize,
    below: Vec<u64>,
}

impl Heap {
    pub fn empty() -> Heap {
        Heap {
            labels: Vec::new(),
            words_per_row: 0,
            below: Vec::new(),
        }
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.below[i * self.words_per_row..(i + 1) * self.words_per_row]
    }

    /// The heap of a word: `i` precedes `j` when `i < j` and the letters are
    /// equal or adjacent, closed transitively.
    pub fn of_word(graph: &CoxeterGraph, word: &Word) -> Heap {
        let mut h = Heap::empty();
        for &g in &word.letters {
            h = h.extend_top(graph, g);
        }
        h
    }

    /// Add one new maximal element labeled `g` on top.
    pub fn extend_top(&self, graph: &CoxeterGraph, g: Gen) -> Heap {
        let n = self.labels.len();
        let wpr = (n + 1).div_ceil(64);
        let mut below = vec![0u64; (n + 1) * wpr];
        if self.words_per_row == wpr {
            for i in 0..n {
                below[i * wpr..(i + 1) * wpr].copy_from_slice(self.row(i));
            }
        } else {
            for i in 0..n {
                below[i * wpr..i * wpr + self.words_per_row].copy_from_slice(self.row(i));
            }
        }
        let (head, down) = below.split_at_mut(n * wpr);
        for j in 0..n {
            let lj = self.labels[j];
            if lj == g || graph.are_adjacent(lj, g) {
                for (w, v) in down.iter_mut().zip(&head[j * wpr..(j + 1) * wpr]) {
                    *w |= v;
                }
                down[j / 64] |= 1 << (j % 64);
            }
        }
        let mut labels = Vec::with_capacity(n + 1);
        labels.extend_from_slice(&self.labels);
        labels.push(g);
        Heap {
            labels,
            words_per_row: wpr,
            below,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> Gen {
        self.labels[i]
    }

    pub fn labels(&self) -> &[Gen] {
        &self.labels
    }

    /// Strict order: element `i` below element `j`.
    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.below[j * self.words_per_row + i / 64] & (1 << (i % 64)) != 0
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        i == j || self.lt(i, j) || self.lt(j, i)
    }

    /// Ids strictly inside the interval `(a, b)`, in id order.
    pub fn strictly_between(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.lt(a, x) && self.lt(x, b))
            .collect()
    }

    /// One word whose heap is this heap (the construction order itself).
    pub fn witness(&self) -> Word {
        Word::new(self.labels.clone())
    }

    /// Elements whose labels satisfy `keep`, bottom to top, if they form a
    /// chain; `None` when two of them are incomparable. Id order already is
    /// the heap order on any chain, so no sorting is involved.
    pub fn chain_ids(&self, keep: impl Fn(Gen) -> bool) -> Option<Vec<usize>> {
        let ids: Vec<usize> = (0..self.len()).filter(|&i| keep(self.labels[i])).collect();
        for a in 0..ids.len() {
            for b in a + 1..ids.len() {
                if !self.lt(ids[a], ids[b]) {
                    return None;
                }
            }
        }
        Some(ids)
    }

    /// The chain of elements labeled by one of two bonded generators (or one
    /// generator). Total by the heap axioms, so no verification is needed.
    fn edge_chain(&self, s: Gen, t: Gen) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.labels[i] == s || self.labels[i] == t)
            .collect()
    }

    /// The labels of the chain of elements carrying labels in `labels`,
    /// bottom to top. Fails with `NotAChain` if the restriction is not
    /// totally ordered.
    pub fn chain_word(&self, labels: &[Gen]) -> Result<Word, HeapError> {
        let ids = self
            .chain_ids(|g| labels.contains(&g))
            .ok_or(HeapError::NotAChain)?;
        Ok(Word::new(ids.into_iter().map(|i| self.labels[i]).collect()))
    }

    /// Cartier-Foata normal form: repeatedly emit the minimal elements, each
    /// layer sorted by generator index. Identical for isomorphic heaps.
    pub fn canonical_word(&self) -> Word {
        let n = self.len();
        // pending[i] = how many elements below i are still present
        let mut pending: Vec<usize> = (0..n)
            .map(|i| self.row(i).iter().map(|w| w.count_ones() as usize).sum())
            .collect();
        let mut removed = vec![false; n];
        let mut out = Vec::with_capacity(n);
        while out.len() < n {
            let mut layer: Vec<usize> = (0..n).filter(|&i| !removed[i] && pending[i] == 0).collect();
            layer.sort_by_key(|&i| self.labels[i]);
            debug_assert!(!layer.is_empty());
            for &i in &layer {
                out.push(self.labels[i]);
                removed[i] = true;
            }
            for &i in &layer {
                for j in 0..n {
                    if !removed[j] && self.lt(i, j) {
                        pending[j] -= 1;
                    }
                }
            }
        }
        Word::new(out)
    }

    /// Label-preserving poset isomorphism, decided by comparing canonical
    /// words. Both heaps must live over the same graph.
    pub fn is_isomorphic(&self, other: &Heap) -> bool {
        self.labels.len() == other.labels.len() && self.canonical_word() == other.canonical_word()
    }

    /// All linear extensions as words, cut off at `cap`. The boolean is true
    /// when the cap truncated the enumeration.
    pub fn linear_extensions(&self, cap: usize) -> (Vec<Word>, bool) {
        assert!(cap >= 1);
        let n = self.len();
        let mut out = Vec::new();
        let mut truncated = false;
        let mut used = vec![false; n];
        let mut prefix = Vec::with_capacity(n);
        self.extensions_rec(&mut used, &mut prefix, cap, &mut out, &mut truncated);
        (out, truncated)
    }

    fn extensions_rec(
        &self,
        used: &mut [bool],
        prefix: &mut Vec<Gen>,
        cap: usize,
        out: &mut Vec<Word>,
        truncated: &mut bool,
    ) {
        if out.len() >= cap {
            *truncated = true;
            return;
        }
        let n = self.len();
        if prefix.len() == n {
            out.push(Word::new(prefix.clone()));
            return;
        }
        for i in 0..n {
            if used[i] || (0..n).any(|j| !used[j] && self.lt(j, i)) {
                continue;
            }
            used[i] = true;
            prefix.push(self.labels[i]);
            self.extensions_rec(used, prefix, cap, out, truncated);
            prefix.pop();
            used[i] = false;
            if *truncated && out.len() >= cap {
                return;
            }
        }
    }

    /// The heap with the order reversed and the labels kept.
    pub fn dual(&self, graph: &CoxeterGraph) -> Heap {
        let mut rev = self.labels.clone();
        rev.reverse();
        Heap::of_word(graph, &Word::new(rev))
    }

    /// Generators labeling a maximal element. For a fully commutative heap
    /// these are exactly the right descents of the element.
    pub fn maximal_labels(&self) -> Vec<Gen> {
        let n = self.len();
        let mut out: Vec<Gen> = (0..n)
            .filter(|&i| (0..n).all(|j| !self.lt(i, j)))
            .map(|i| self.labels[i])
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Stembridge's criterion on heaps: no convex chain alternating `s,t` of
    /// length `m(s,t)` for a finite bond >= 3, and no covering relation
    /// between equal labels. Only meaningful on heaps of reduced words.
    pub fn is_fc(&self, graph: &CoxeterGraph) -> bool {
        // (b) equal labels never form a cover
        for s in graph.generators() {
            let chain = self.edge_chain(s, s);
            for w in chain.windows(2) {
                if self.strictly_between(w[0], w[1]).is_empty() {
                    return false;
                }
            }
        }
        // (a) no convex alternating chain of length m(s,t)
        for (s, t, bond) in graph.edges() {
            let m = match bond {
                Bond::Finite(m) => m as usize,
                Bond::Infinite => continue,
            };
            let chain = self.edge_chain(s, t);
            if chain.len() < m {
                continue;
            }
            for win in chain.windows(m) {
                let alternating = win
                    .windows(2)
                    .all(|p| self.labels[p[0]] != self.labels[p[1]]);
                if !alternating {
                    continue;
                }
                // Convex iff the interval holds exactly the window elements.
                if self.strictly_between(win[0], win[m - 1]).len() == m - 2 {
                    return false;
                }
            }
        }
        true
    }

    /// True when every bonded-pair chain strictly alternates its two labels.
    pub fn is_alternating(&self, graph: &CoxeterGraph) -> bool {
        for (s, t, _) in graph.edges() {
            let chain = self.edge_chain(s, t);
            if chain
                .windows(2)
                .any(|p| self.labels[p[0]] == self.labels[p[1]])
            {
                return false;
            }
        }
        true
    }

    /// Covering relations `(i, j)` with `i` covered by `j`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for j in 0..n {
            for i in 0..n {
                if self.lt(i, j) && self.strictly_between(i, j).is_empty() {
                    out.push((i, j));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// JSON form `{"labels": [...], "covers": [[i,j], ...]}`.
    pub fn to_json(&self, graph: &CoxeterGraph) -> serde_json::Value {
        serde_json::json!({
            "labels": self.labels.iter().map(|&g| graph.gen_name(g)).collect::<Vec<_>>(),
            "covers": self.covers(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, TypeSpec};
    use proptest::prelude::*;

    fn graph(spec: &str) -> CoxeterGraph {
        build_graph(TypeSpec::parse(spec).unwrap()).unwrap()
    }

    fn heap(g: &CoxeterGraph, text: &str) -> Heap {
        Heap::of_word(g, &Word::parse(g, text).unwrap())
    }

    #[test]
    fn heap_of_word_structure() {
        // A:4, w = s2 s1 s3 s2: s1 and s3 incomparable, both between the s2s.
        let g = graph("A:4");
        let h = heap(&g, "s2 s1 s3 s2");
        assert_eq!(h.len(), 4);
        // ids: 0 = first s2, 1 = s1, 2 = s3, 3 = last s2
        assert!(!h.comparable(1, 2));
        assert!(h.lt(0, 1) && h.lt(0, 2));
        assert!(h.lt(1, 3) && h.lt(2, 3));
        // empty word gives the empty heap
        assert!(Heap::of_word(&g, &Word::empty()).is_empty());
    }

    #[test]
    fn commutation_classes_and_isomorphism() {
        let g = graph("A:4");
        let h1 = heap(&g, "s1 s3");
        let h2 = heap(&g, "s3 s1");
        assert!(h1.is_isomorphic(&h2));
        let g2 = graph("A:3");
        let b1 = heap(&g2, "s1 s2");
        let b2 = heap(&g2, "s2 s1");
        assert!(!b1.is_isomorphic(&b2));
        // a palindromic chain equals its dual
        let c = graph("Ctilde:2");
        let p = heap(&c, "t s1 t");
        assert!(p.is_isomorphic(&p.dual(&c)));
    }

    #[test]
    fn canonical_word_layers() {
        let g = graph("A:4");
        assert_eq!(
            heap(&g, "s3 s1").canonical_word(),
            Word::parse(&g, "s1 s3").unwrap()
        );
        assert_eq!(Heap::empty().canonical_word(), Word::empty());
        assert_eq!(
            heap(&g, "s2 s1 s3 s2").canonical_word(),
            Word::parse(&g, "s2 s1 s3 s2").unwrap()
        );
    }

    #[test]
    fn linear_extension_counts() {
        let g = graph("A:4");
        let (exts, trunc) = heap(&g, "s1 s3").linear_extensions(100);
        assert!(!trunc);
        let mut exts = exts;
        exts.sort();
        assert_eq!(
            exts,
            vec![
                Word::parse(&g, "s1 s3").unwrap(),
                Word::parse(&g, "s3 s1").unwrap()
            ]
        );
        let c = graph("Ctilde:2");
        let (exts, _) = heap(&c, "t s1 t").linear_extensions(100);
        assert_eq!(exts.len(), 1);
        let (exts, _) = heap(&g, "s2 s1 s3 s2").linear_extensions(100);
        assert_eq!(exts.len(), 2);
        // cap truncates
        let wide = heap(&g, "s1 s3");
        let (exts, trunc) = wide.linear_extensions(1);
        assert_eq!(exts.len(), 1);
        assert!(trunc);
    }

    #[test]
    fn dual_examples() {
        let g = graph("A:3");
        assert!(Heap::empty().dual(&g).is_empty());
        assert!(heap(&g, "s1 s2").dual(&g).is_isomorphic(&heap(&g, "s2 s1")));
        let c = graph("Ctilde:2");
        assert!(heap(&c, "t s1 u s1")
            .dual(&c)
            .is_isomorphic(&heap(&c, "s1 u s1 t")));
    }

    #[test]
    fn fc_criterion() {
        let a2 = graph("A:3");
        assert!(!heap(&a2, "s1 s2 s1").is_fc(&a2)); // braid of length m = 3
        let c2 = graph("Ctilde:2");
        assert!(heap(&c2, "t s1 t").is_fc(&c2)); // length 3 < m = 4
        assert!(!heap(&c2, "t s1 t s1").is_fc(&c2)); // the long element of I2(4)
        assert!(!heap(&a2, "s1 s1").is_fc(&a2)); // equal-label cover
        // the interleaved s3 does not break the convexity of the s1 s2 s1 chain
        let a3 = graph("A:4");
        assert!(!heap(&a3, "s1 s2 s3 s1").is_fc(&a3));
        assert!(heap(&a3, "s2 s1 s3 s2").is_fc(&a3));
    }

    #[test]
    fn alternation_predicate() {
        let c2 = graph("Ctilde:2");
        assert!(Heap::empty().is_alternating(&c2));
        // t s1 u s1 t: the {t,s1}-chain is t,s1,s1,t -> not alternating
        assert!(!heap(&c2, "t s1 u s1 t").is_alternating(&c2));
        // t s1 u: all chains singletons or pairs
        assert!(heap(&c2, "t s1 u").is_alternating(&c2));
        // A:3, s1 s2 s1 alternates but is not FC
        let a2 = graph("A:3");
        let h = heap(&a2, "s1 s2 s1");
        assert!(h.is_alternating(&a2));
        assert!(!h.is_fc(&a2));
    }

    #[test]
    fn chain_words() {
        let c2 = graph("Ctilde:2");
        let h = heap(&c2, "t s1 u s1 t");
        let t = c2.gen_by_name("t").unwrap();
        let s1 = c2.gen_by_name("s1").unwrap();
        assert_eq!(
            h.chain_word(&[t, s1]).unwrap(),
            Word::parse(&c2, "t s1 s1 t").unwrap()
        );
        assert_eq!(
            h.chain_word(&[s1]).unwrap(),
            Word::parse(&c2, "s1 s1").unwrap()
        );
        assert_eq!(Heap::empty().chain_word(&[t]).unwrap(), Word::empty());
        // non-chain restriction errors
        let a3 = graph("A:4");
        let w = heap(&a3, "s1 s3");
        let g1 = a3.gen_by_name("s1").unwrap();
        let g3 = a3.gen_by_name("s3").unwrap();
        assert_eq!(w.chain_word(&[g1, g3]), Err(HeapError::NotAChain));
    }

    #[test]
    fn duality_preserves_predicates_exhaustively() {
        // all words of length <= 6 over Ctilde:2
        let c2 = graph("Ctilde:2");
        let gens: Vec<Gen> = c2.generators().collect();
        let mut stack = vec![Vec::new()];
        while let Some(w) = stack.pop() {
            let h = Heap::of_word(&c2, &Word::new(w.clone()));
            let d = h.dual(&c2);
            assert_eq!(h.is_fc(&c2), d.is_fc(&c2));
            assert_eq!(h.is_alternating(&c2), d.is_alternating(&c2));
            let (e1, _) = h.linear_extensions(10_000);
            let (e2, _) = d.linear_extensions(10_000);
            assert_eq!(e1.len(), e2.len());
            if w.len() < 6 {
                for &g in &gens {
                    let mut w2 = w.clone();
                    w2.push(g);
                    stack.push(w2);
                }
            }
        }
    }

    #[test]
    fn round_trip_exhaustive_small() {
        // canonical_word(heap_of_word(w)) stays in the commutation class and
        // rebuilds an isomorphic heap; exhaustive over several graphs.
        for (spec, maxlen) in [("A:6", 8), ("Ctilde:3", 8), ("Atilde:3", 8), ("G2tilde", 8)] {
            let g = graph(spec);
            let gens: Vec<Gen> = g.generators().collect();
            let mut stack = vec![Vec::new()];
            while let Some(w) = stack.pop() {
                let word = Word::new(w.clone());
                let h = Heap::of_word(&g, &word);
                let canon = h.canonical_word();
                let h2 = Heap::of_word(&g, &canon);
                assert!(h.is_isomorphic(&h2), "round trip failed on {spec}");
                if w.len() < maxlen {
                    for &gg in &gens {
                        let mut w2 = w.clone();
                        w2.push(gg);
                        stack.push(w2);
                    }
                }
            }
        }
    }

    #[test]
    fn witness_rebuilds_the_heap() {
        let g = graph("Ctilde:3");
        for text in ["", "t s1 u", "s1 t s1 s2 u s2", "t s1 s2 u s2 s1 t"] {
            let h = heap(&g, text);
            assert_eq!(Heap::of_word(&g, &h.witness()), h);
        }
    }

    #[test]
    fn canonical_word_is_in_commutation_class() {
        // the canonical word must appear among the linear extensions
        let g = graph("Ctilde:3");
        let h = heap(&g, "s1 t s2 s1 u s2");
        let (exts, trunc) = h.linear_extensions(100_000);
        assert!(!trunc);
        assert!(exts.contains(&h.canonical_word()));
    }

    #[test]
    fn heap_json_shape() {
        let g = graph("A:3");
        let h = heap(&g, "s1 s2");
        let v = h.to_json(&g);
        assert_eq!(v["labels"], serde_json::json!(["s1", "s2"]));
        assert_eq!(v["covers"], serde_json::json!([[0, 1]]));
    }

    proptest! {
        // random words over A:5 / Ctilde:3: heap round trip and duality
        #[test]
        fn prop_round_trip_random(word_idx in proptest::collection::vec(0usize..4, 0..12), pick in 0usize..2) {
            let g = if pick == 0 { graph("A:5") } else { graph("Ctilde:3") };
            let gens: Vec<Gen> = g.generators().collect();
            let letters: Vec<Gen> = word_idx.iter().map(|&i| gens[i % gens.len()]).collect();
            let word = Word::new(letters);
            let h = Heap::of_word(&g, &word);
            let h2 = Heap::of_word(&g, &h.canonical_word());
            prop_assert!(h.is_isomorphic(&h2));
            let d = h.dual(&g);
            prop_assert_eq!(h.is_fc(&g), d.is_fc(&g));
            prop_assert_eq!(h.is_alternating(&g), d.is_alternating(&g));
        }
    }
}
