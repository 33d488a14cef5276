//! Formula-free enumeration of all fully commutative elements up to a length
//! bound, by layered extension of FC heaps. This is the ground truth every
//! generating-function formula is checked against.
//!
//! Layer `l` holds the FC heaps of size `l`. Layer `l+1` is built by adding,
//! on top of each heap, a new element for every generator that does not label
//! a maximal element, and keeping the extension when it is still FC. For an
//! FC element the maximal labels are exactly the right descents, so every
//! extension word is reduced, and every FC element of the next length arises
//! this way. Duplicates are merged by canonical word.

use std::collections::BTreeMap;

use crate::graph::CoxeterGraph;
use crate::heap::{Heap, Word};

/// Counts of FC elements by Coxeter length.
#[derive(Clone, Debug)]
pub struct GrowthRecord {
    /// `counts[l]` = number of FC elements of length `l`, exact for `l <= max_len`.
    pub counts: Vec<u64>,
    pub max_len: usize,
    /// True when some layer came up empty, i.e. the whole (finite) FC set
    /// was enumerated.
    pub complete: bool,
}

/// Iterator over the layers of the FC enumeration; each item is the sorted
/// list of (canonical word, heap) pairs of one length.
struct Layers<'a> {
    graph: &'a CoxeterGraph,
    max_len: usize,
    next_len: usize,
    layer: Vec<Heap>,
}

impl<'a> Layers<'a> {
    fn new(graph: &'a CoxeterGraph, max_len: usize) -> Layers<'a> {
        Layers {
            graph,
            max_len,
            next_len: 0,
            layer: vec![Heap::empty()],
        }
    }
}

impl Iterator for Layers<'_> {
    type Item = Vec<(Word, Heap)>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.next_len > self.max_len || self.layer.is_empty() {
            return None;
        }
        if self.next_len == 0 {
            self.next_len = 1;
            return Some(vec![(Word::empty(), Heap::empty())]);
        }
        let mut merged: BTreeMap<Word, Heap> = BTreeMap::new();
        for h in &self.layer {
            let descents = h.maximal_labels();
            for g in self.graph.generators() {
                if descents.contains(&g) {
                    continue;
                }
                let ext = h.extend_top(self.graph, g);
                if ext.is_fc(self.graph) {
                    merged.entry(ext.canonical_word()).or_insert(ext);
                }
            }
        }
        self.next_len += 1;
        self.layer = merged.values().cloned().collect();
        Some(merged.into_iter().collect())
    }
}

/// Exact counts of FC elements of each length `<= max_len`.
pub fn enumerate_fc(graph: &CoxeterGraph, max_len: usize) -> GrowthRecord {
    let mut counts = vec![0u64; max_len + 1];
    let mut complete = false;
    let mut layers = Layers::new(graph, max_len);
    let mut len = 0;
    while len <= max_len {
        match layers.next() {
            Some(layer) => {
                counts[len] = layer.len() as u64;
                if layer.is_empty() {
                    complete = true;
                    break;
                }
            }
            None => {
                complete = true;
                break;
            }
        }
        len += 1;
    }
    GrowthRecord {
        counts,
        max_len,
        complete,
    }
}

/// One enumerated FC element.
#[derive(Clone, Debug)]
pub struct FcElement {
    pub len: usize,
    pub word: Word,
    pub heap: Heap,
}

/// Stream of all FC elements up to `max_len`, ordered by length and then by
/// canonical word.
pub fn fc_elements<'a>(
    graph: &'a CoxeterGraph,
    max_len: usize,
) -> impl Iterator<Item = FcElement> + 'a {
    Layers::new(graph, max_len)
        .enumerate()
        .flat_map(|(len, layer)| {
            layer
                .into_iter()
                .map(move |(word, heap)| FcElement { len, word, heap })
        })
}
