//! Labeled lattice walks, their height statistics, direct enumeration with
//! area weights, and the bijective encodings of alternating heaps by walks.
//!
//! A walk of length `n` is a sequence of `n+1` points in the quarter plane
//! with steps up, down, or level, level steps carrying a label `L` or `R`.
//! Condition `(*)` forces level steps at height zero to carry `L`. The walk
//! families are cut out by endpoint constraints: any endpoints, ending at
//! zero, starting at a given height and ending at zero, or start and end at
//! equal heights. The `touch` refinement keeps the walks that meet the
//! x-axis.
//!
//! Two statistics turn walks into q-polynomials: `ht` sums the heights of all
//! points, `ht'` leaves out the last point. Under the encoding of alternating
//! heaps over a path-shaped diagram, `ht` is the heap size; for the cyclic
//! diagram the closed walks carry `ht'` instead.

use std::fmt;

use thiserror::Error;

use crate::graph::{CoxeterGraph, Gen};
use crate::heap::{Heap, Word};
use crate::series::QPoly;

/// Label of a level step.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum LevelLabel {
    L,
    R,
}

/// One walk step.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Step {
    Up,
    Down,
    Level(LevelLabel),
}

/// A walk: a start height plus a step sequence, all points staying >= 0.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Walk {
    pub start: usize,
    pub steps: Vec<Step>,
}

#[derive(Error, Clone, PartialEq, Eq, Debug)]
pub enum WalkError {
    #[error("walk dips below the x-axis")]
    NegativeHeight,
    #[error("heap is not alternating")]
    NotAlternating,
    #[error("heap is not fully commutative")]
    NotFullyCommutative,
    #[error("level step at height zero labeled R violates condition (*)")]
    StarViolation,
    #[error("constant-height uniform-label walks encode no group element")]
    ForbiddenEWalk,
    #[error("walk must start and end at the same height")]
    NotClosed,
    #[error("cannot parse walk {0:?}")]
    Parse(String),
}

impl Walk {
    pub fn new(start: usize, steps: Vec<Step>) -> Result<Walk, WalkError> {
        let w = Walk { start, steps };
        if w.heights().any(|h| h < 0) {
            return Err(WalkError::NegativeHeight);
        }
        Ok(w)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Heights of the `n+1` points, start first.
    pub fn heights(&self) -> impl Iterator<Item = i64> + '_ {
        let mut h = self.start as i64;
        std::iter::once(h).chain(self.steps.iter().map(move |s| {
            match s {
                Step::Up => h += 1,
                Step::Down => h -= 1,
                Step::Level(_) => {}
            }
            h
        }))
    }

    pub fn end_height(&self) -> usize {
        self.heights().last().unwrap() as usize
    }

    /// Sum of the heights of all `n+1` points.
    pub fn ht(&self) -> usize {
        self.heights().sum::<i64>() as usize
    }

    /// Sum of the heights of the first `n` points (all but the last).
    pub fn ht_prime(&self) -> usize {
        let n = self.len();
        self.heights().take(n).sum::<i64>() as usize
    }

    pub fn touches_axis(&self) -> bool {
        self.heights().any(|h| h == 0)
    }

    /// Condition `(*)`: every level step at height zero is labeled `L`.
    pub fn satisfies_star(&self) -> bool {
        let hs: Vec<i64> = self.heights().collect();
        self.steps
            .iter()
            .enumerate()
            .all(|(i, s)| !matches!(s, Step::Level(LevelLabel::R)) || hs[i] != 0)
    }

    /// Member of the excluded family: positive constant height and all steps
    /// level with one common label.
    pub fn is_uniform_level(&self) -> bool {
        if self.start == 0 || self.steps.is_empty() {
            return false;
        }
        let first = match self.steps[0] {
            Step::Level(l) => l,
            _ => return false,
        };
        self.steps.iter().all(|s| *s == Step::Level(first))
    }

    /// Parse `"@h U D L R ..."`; a missing `@h` prefix means start height 0.
    pub fn parse(text: &str) -> Result<Walk, WalkError> {
        let mut start = 0usize;
        let mut steps = Vec::new();
        for (i, tok) in text.split_whitespace().enumerate() {
            if i == 0 {
                if let Some(h) = tok.strip_prefix('@') {
                    start = h.parse().map_err(|_| WalkError::Parse(text.to_string()))?;
                    continue;
                }
            }
            steps.push(match tok {
                "U" => Step::Up,
                "D" => Step::Down,
                "L" => Step::Level(LevelLabel::L),
                "R" => Step::Level(LevelLabel::R),
                _ => return Err(WalkError::Parse(text.to_string())),
            });
        }
        Walk::new(start, steps)
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "@{}", self.start)?;
        for s in &self.steps {
            let c = match s {
                Step::Up => "U",
                Step::Down => "D",
                Step::Level(LevelLabel::L) => "L",
                Step::Level(LevelLabel::R) => "R",
            };
            write!(f, " {c}")?;
        }
        Ok(())
    }
}

/// Endpoint constraint of a walk family.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Constraint {
    /// Any start, any end.
    Free,
    /// Ends on the x-axis.
    EndsAtZero,
    /// Starts at the given height, ends on the x-axis.
    FromHeight(usize),
    /// Start and end at the same height.
    Closed,
}

/// A family of walks of one length, with the star and touch refinements.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct WalkFamily {
    pub len: usize,
    pub constraint: Constraint,
    pub star: bool,
    pub touch: bool,
}

impl WalkFamily {
    pub fn new(len: usize, constraint: Constraint) -> WalkFamily {
        WalkFamily {
            len,
            constraint,
            star: false,
            touch: false,
        }
    }

    pub fn star(mut self) -> WalkFamily {
        self.star = true;
        self
    }

    pub fn touch(mut self) -> WalkFamily {
        self.touch = true;
        self
    }
}

/// Which height statistic weights the family.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Stat {
    Ht,
    HtPrime,
}

/// Visit every walk of the family whose statistic stays `<= max_weight`.
///
/// Points counted by the statistic are capped at `max_weight`, which is exact
/// pruning: any taller point alone already exceeds the bound.
pub fn for_each_walk(fam: WalkFamily, stat: Stat, max_weight: usize, mut f: impl FnMut(&Walk)) {
    let starts: Vec<usize> = match fam.constraint {
        Constraint::FromHeight(i) => vec![i],
        _ => (0..=max_weight).collect(),
    };
    let mut steps: Vec<Step> = Vec::with_capacity(fam.len);
    for start in starts {
        if start > max_weight {
            continue;
        }
        let weight0 = if fam.len == 0 && stat == Stat::HtPrime {
            0
        } else {
            start
        };
        if weight0 > max_weight {
            continue;
        }
        rec_walks(fam, stat, max_weight, start, start, weight0, start == 0, &mut steps, &mut f);
    }
}

#[allow(clippy::too_many_arguments)]
fn rec_walks(
    fam: WalkFamily,
    stat: Stat,
    max_weight: usize,
    start: usize,
    height: usize,
    weight: usize,
    touched: bool,
    steps: &mut Vec<Step>,
    f: &mut impl FnMut(&Walk),
) {
    if steps.len() == fam.len {
        let ok = match fam.constraint {
            Constraint::Free => true,
            Constraint::EndsAtZero | Constraint::FromHeight(_) => height == 0,
            Constraint::Closed => height == start,
        } && (!fam.touch || touched);
        if ok {
            f(&Walk {
                start,
                steps: steps.clone(),
            });
        }
        return;
    }
    let last = steps.len() + 1 == fam.len;
    let mut candidates: Vec<(Step, usize)> = Vec::with_capacity(4);
    candidates.push((Step::Up, height + 1));
    if height > 0 {
        candidates.push((Step::Down, height - 1));
    }
    candidates.push((Step::Level(LevelLabel::L), height));
    if height > 0 || !fam.star {
        candidates.push((Step::Level(LevelLabel::R), height));
    }
    for (step, nh) in candidates {
        let counted = !(last && stat == Stat::HtPrime);
        let nw = if counted { weight + nh } else { weight };
        if counted && nw > max_weight {
            continue;
        }
        steps.push(step);
        rec_walks(fam, stat, max_weight, start, nh, nw, touched || nh == 0, steps, f);
        steps.pop();
    }
}

/// Exact generating polynomial of the family by direct enumeration, truncated
/// at `q^max_weight`.
pub fn enumerate_walks(fam: WalkFamily, stat: Stat, max_weight: usize) -> QPoly {
    let mut coeffs = vec![0i64; max_weight + 1];
    for_each_walk(fam, stat, max_weight, |w| {
        let s = match stat {
            Stat::Ht => w.ht(),
            Stat::HtPrime => w.ht_prime(),
        };
        coeffs[s] += 1;
    });
    QPoly::from_coeffs(coeffs)
}

/// Encode an alternating heap over a path-shaped diagram (generators indexed
/// along the path) as a walk: point `i` sits at the size of the chain of
/// elements labeled by vertex `i`, and a level step is labeled `L` or `R`
/// according to whether the lower of the two interleaved chains starts with
/// the right or the left vertex. Level steps at height zero get `L`.
///
/// The walk satisfies `(*)` and its total height is the heap size.
pub fn phi(graph: &CoxeterGraph, heap: &Heap) -> Result<Walk, WalkError> {
    assert!(
        graph.is_linear_path(),
        "walk encoding needs a path-shaped diagram"
    );
    if !heap.is_alternating(graph) {
        return Err(WalkError::NotAlternating);
    }
    let n = graph.generator_count() - 1;
    let counts: Vec<usize> = (0..=n)
        .map(|i| heap.labels().iter().filter(|&&g| g.index() == i).count())
        .collect();
    let mut steps = Vec::with_capacity(n);
    for i in 0..n {
        steps.push(step_between(heap, Gen(i as u8), Gen((i + 1) as u8), counts[i], counts[i + 1]));
    }
    Walk::new(counts[0], steps)
}

/// The step from column `a` (with `ca` elements) to column `b` (`cb`): up,
/// down, or a level step labeled by the lowest element of the joint chain.
fn step_between(heap: &Heap, a: Gen, b: Gen, ca: usize, cb: usize) -> Step {
    if cb == ca + 1 {
        Step::Up
    } else if cb + 1 == ca {
        Step::Down
    } else {
        debug_assert_eq!(ca, cb, "alternation bounds chain sizes by one");
        if ca == 0 {
            Step::Level(LevelLabel::L)
        } else {
            let lowest = (0..heap.len())
                .find(|&i| heap.label(i) == a || heap.label(i) == b)
                .expect("nonempty chain");
            if heap.label(lowest) == b {
                Step::Level(LevelLabel::L)
            } else {
                Step::Level(LevelLabel::R)
            }
        }
    }
}

/// The chains a walk step encodes, as (column, copy) pairs bottom to top.
/// Columns `i` and `i+1` hold `h_i` and `h_{i+1}` copies.
fn step_chain(i: usize, hi: usize, hi1: usize, step: Step) -> Vec<(usize, usize)> {
    let mut chain = Vec::new();
    match step {
        Step::Up => {
            // h_{i+1} = h_i + 1: starts and ends with the right column
            for k in 0..hi {
                chain.push((i + 1, k));
                chain.push((i, k));
            }
            chain.push((i + 1, hi));
        }
        Step::Down => {
            // h_i = h_{i+1} + 1: starts and ends with the left column
            for k in 0..hi1 {
                chain.push((i, k));
                chain.push((i + 1, k));
            }
            chain.push((i, hi1));
        }
        Step::Level(LevelLabel::L) => {
            // lowest is the right column
            for k in 0..hi {
                chain.push((i + 1, k));
                chain.push((i, k));
            }
        }
        Step::Level(LevelLabel::R) => {
            for k in 0..hi {
                chain.push((i, k));
                chain.push((i + 1, k));
            }
        }
    }
    chain
}

/// Assemble a heap from per-step chains: topologically sort the union of the
/// chain digraphs and read off a word. Returns `None` on a cycle.
fn heap_from_chains(
    graph: &CoxeterGraph,
    columns: usize,
    heights: &[usize],
    chains: impl Iterator<Item = Vec<(usize, usize)>>,
) -> Option<Heap> {
    let offset: Vec<usize> = heights[..columns]
        .iter()
        .scan(0, |acc, &h| {
            let o = *acc;
            *acc += h;
            Some(o)
        })
        .collect();
    let total: usize = heights[..columns].iter().sum();
    let id = |(col, copy): (usize, usize)| offset[col] + copy;
    let mut succs: Vec<Vec<usize>> = vec![Vec::new(); total];
    let mut indeg = vec![0usize; total];
    for chain in chains {
        for pair in chain.windows(2) {
            succs[id(pair[0])].push(id(pair[1]));
            indeg[id(pair[1])] += 1;
        }
    }
    // Kahn topological sort
    let mut queue: Vec<usize> = (0..total).filter(|&v| indeg[v] == 0).collect();
    let mut word = Vec::with_capacity(total);
    let label_of = |v: usize| {
        let col = (0..columns).rfind(|&c| offset[c] <= v).unwrap();
        Gen(col as u8)
    };
    while let Some(v) = queue.pop() {
        word.push(label_of(v));
        for &w in &succs[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                queue.push(w);
            }
        }
    }
    if word.len() != total {
        return None; // cycle
    }
    Some(Heap::of_word(graph, &Word::new(word)))
}

/// Decode a star walk into the unique alternating heap over the path-shaped
/// diagram with `walk.len() + 1` vertices.
pub fn phi_inv(graph: &CoxeterGraph, walk: &Walk) -> Result<Heap, WalkError> {
    assert!(
        graph.is_linear_path(),
        "walk encoding needs a path-shaped diagram"
    );
    assert_eq!(
        graph.generator_count(),
        walk.len() + 1,
        "walk length must match the diagram"
    );
    if !walk.satisfies_star() {
        return Err(WalkError::StarViolation);
    }
    let heights: Vec<usize> = walk.heights().map(|h| h as usize).collect();
    let n = walk.len();
    let chains = (0..n).map(|i| step_chain(i, heights[i], heights[i + 1], walk.steps[i]));
    let heap = heap_from_chains(graph, n + 1, &heights, chains)
        .expect("path-shaped chain unions are acyclic");
    debug_assert_eq!(phi(graph, &heap).as_ref(), Ok(walk));
    Ok(heap)
}

/// Encode an FC heap over the cycle-shaped diagram on `n` generators as a
/// closed walk of length `n` (first and last point at the height of the
/// chain of generator 0). The statistic `ht'` gives back the heap size.
pub fn phi_prime(graph: &CoxeterGraph, heap: &Heap) -> Result<Walk, WalkError> {
    let n = graph.generator_count();
    assert!(n >= 3, "cyclic encoding needs at least three generators");
    if !heap.is_fc(graph) || !heap.is_alternating(graph) {
        return Err(WalkError::NotFullyCommutative);
    }
    let counts: Vec<usize> = (0..n)
        .map(|i| heap.labels().iter().filter(|&&g| g.index() == i).count())
        .collect();
    let mut steps = Vec::with_capacity(n);
    for i in 0..n {
        let j = (i + 1) % n;
        steps.push(step_between(heap, Gen(i as u8), Gen(j as u8), counts[i], counts[j]));
    }
    Walk::new(counts[0], steps)
}

/// Decode a closed star walk (not of the excluded uniform-level kind) into
/// the unique FC heap over the cycle-shaped diagram on `walk.len()` vertices.
pub fn phi_prime_inv(graph: &CoxeterGraph, walk: &Walk) -> Result<Heap, WalkError> {
    let n = graph.generator_count();
    assert_eq!(n, walk.len(), "walk length must match the cycle size");
    if !walk.satisfies_star() {
        return Err(WalkError::StarViolation);
    }
    if walk.end_height() != walk.start {
        return Err(WalkError::NotClosed);
    }
    if walk.is_uniform_level() {
        return Err(WalkError::ForbiddenEWalk);
    }
    let heights: Vec<usize> = walk.heights().map(|h| h as usize).collect();
    let chains = (0..n).map(|i| {
        let mut chain = step_chain(i, heights[i], heights[i + 1], walk.steps[i]);
        for p in &mut chain {
            p.0 %= n; // wrap the last column onto column 0
        }
        chain
    });
    let heap = heap_from_chains(graph, n, &heights, chains)
        .expect("off the excluded family the chain union is acyclic");
    debug_assert_eq!(phi_prime(graph, &heap).as_ref(), Ok(walk));
    Ok(heap)
}
