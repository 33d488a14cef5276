//! The five-family classification of FC heaps over the affine diagram with
//! two double bonds (alternating, zigzag, left/right/left-right peak), the
//! fork substitutions producing FC heaps of the singly and doubly forked
//! affine diagrams, and runtime checks of the structural lemmas behind the
//! classification.
//!
//! Classification is literal clause checking of the family definitions; the
//! classification theorem then guarantees every FC heap matches exactly one
//! clause, which the code asserts at runtime rather than assuming.

use thiserror::Error;

use crate::graph::{CoxeterGraph, Family, Gen, TypeSpec};
use crate::heap::{Heap, Word};

#[derive(Error, Clone, PartialEq, Eq, Debug)]
pub enum FamilyError {
    #[error("heap is not fully commutative")]
    NotFc,
    #[error("classification failed: {0}")]
    ClassificationFailure(String),
    #[error("structure lemma violated: {0}")]
    LemmaViolation(String),
}

/// The five families.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum FiveFamily {
    Alt,
    Zz,
    Lp,
    Rp,
    Lrp,
}

impl FiveFamily {
    pub fn name(self) -> &'static str {
        match self {
            FiveFamily::Alt => "ALT",
            FiveFamily::Zz => "ZZ",
            FiveFamily::Lp => "LP",
            FiveFamily::Rp => "RP",
            FiveFamily::Lrp => "LRP",
        }
    }
}

/// Which diagram the classified heap lives over.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Decoration {
    None,
    Btilde,
    Dtilde,
}

/// A family label with the peak indices where they apply.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FamilyLabel {
    pub family: FiveFamily,
    pub j: Option<usize>,
    pub k: Option<usize>,
    pub decoration: Decoration,
}

impl FamilyLabel {
    fn plain(family: FiveFamily) -> FamilyLabel {
        FamilyLabel {
            family,
            j: None,
            k: None,
            decoration: Decoration::None,
        }
    }
}

/// Generator roles in the three classical affine diagrams sharing one
/// parameter n: a left end (one or two fork generators), the path
/// s1 .. s{n-1}, and a right end (one or two fork generators).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Shape {
    n: usize,
    kind: Family, // CTilde, BTilde or DTilde
}

impl Shape {
    fn of(graph: &CoxeterGraph) -> Option<Shape> {
        match graph.type_tag() {
            Some(TypeSpec {
                family: Family::CTilde,
                rank,
            }) => Some(Shape {
                n: rank as usize,
                kind: Family::CTilde,
            }),
            Some(TypeSpec {
                family: Family::BTilde,
                rank,
            }) => Some(Shape {
                n: rank as usize - 1,
                kind: Family::BTilde,
            }),
            Some(TypeSpec {
                family: Family::DTilde,
                rank,
            }) => Some(Shape {
                n: rank as usize - 2,
                kind: Family::DTilde,
            }),
            _ => None,
        }
    }

    /// Path generator `s_i`, `1 <= i <= n-1`.
    fn s(&self, i: usize) -> Gen {
        debug_assert!(i >= 1 && i < self.n);
        match self.kind {
            Family::CTilde => Gen(i as u8),
            _ => Gen(i as u8 + 1),
        }
    }

    fn left_gens(&self) -> Vec<Gen> {
        match self.kind {
            Family::CTilde => vec![Gen(0)],
            _ => vec![Gen(0), Gen(1)],
        }
    }

    fn right_gens(&self) -> Vec<Gen> {
        match self.kind {
            Family::CTilde => vec![Gen(self.n as u8)],
            Family::BTilde => vec![Gen(self.n as u8 + 1)],
            _ => vec![Gen(self.n as u8 + 1), Gen(self.n as u8 + 2)],
        }
    }

    /// The peak word through the left end: `s_j .. s_1 (t) s_1 .. s_j`.
    fn left_peak_word(&self, j: usize) -> Vec<Gen> {
        let mut w = Vec::new();
        for i in (1..=j).rev() {
            w.push(self.s(i));
        }
        w.extend(self.left_gens());
        for i in 1..=j {
            w.push(self.s(i));
        }
        w
    }

    /// The peak word through the right end: `s_k .. s_{n-1} (u) s_{n-1} .. s_k`.
    fn right_peak_word(&self, k: usize) -> Vec<Gen> {
        let mut w = Vec::new();
        for i in k..=self.n - 1 {
            w.push(self.s(i));
        }
        w.extend(self.right_gens());
        for i in (k..=self.n - 1).rev() {
            w.push(self.s(i));
        }
        w
    }

    /// One period of the zigzag word `t s_1 .. s_{n-1} u s_{n-1} .. s_1`.
    /// Only used for the unforked diagram.
    fn zigzag_period(&self) -> Vec<Gen> {
        debug_assert_eq!(self.kind, Family::CTilde);
        let mut w = vec![Gen(0)];
        for i in 1..=self.n - 1 {
            w.push(self.s(i));
        }
        w.push(Gen(self.n as u8));
        for i in (1..=self.n - 1).rev() {
            w.push(self.s(i));
        }
        w
    }
}

fn ids_with_label(h: &Heap, g: Gen) -> Vec<usize> {
    (0..h.len()).filter(|&i| h.label(i) == g).collect()
}

/// Alternation of every bonded pair inside `labels`, with the elements in
/// `skip` removed.
fn alternating_within(
    graph: &CoxeterGraph,
    h: &Heap,
    labels: &[Gen],
    skip: &[usize],
) -> bool {
    for (a, b, _) in graph.edges() {
        if !labels.contains(&a) || !labels.contains(&b) {
            continue;
        }
        let chain: Vec<Gen> = (0..h.len())
            .filter(|&i| !skip.contains(&i) && (h.label(i) == a || h.label(i) == b))
            .map(|i| h.label(i))
            .collect();
        if chain.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
    }
    true
}

/// The restriction of the heap to `labels` as a chain word, if it is one.
fn restriction_chain(h: &Heap, labels: &[Gen]) -> Option<Vec<Gen>> {
    let ids = h.chain_ids(|g| labels.contains(&g))?;
    Some(ids.into_iter().map(|i| h.label(i)).collect())
}

/// Left-peak clauses at index `j`; shared by the LP and LRP tests.
fn left_peak_at(shape: &Shape, h: &Heap, j: usize) -> bool {
    // (1) the restriction to the left labels is exactly the peak
    let mut left_labels = shape.left_gens();
    for i in 1..=j {
        left_labels.push(shape.s(i));
    }
    match restriction_chain(h, &left_labels) {
        Some(word) => {
            if word != shape.left_peak_word(j) {
                return false;
            }
        }
        None => return false,
    }
    // (2) nothing of the next label between the two s_j-elements
    let sj = ids_with_label(h, shape.s(j));
    debug_assert_eq!(sj.len(), 2);
    let blocker: Vec<Gen> = if j != shape.n - 1 {
        vec![shape.s(j + 1)]
    } else {
        shape.right_gens()
    };
    !h.strictly_between(sj[0], sj[1])
        .iter()
        .any(|&x| blocker.contains(&h.label(x)))
}

/// Right-peak clauses at index `k`.
fn right_peak_at(shape: &Shape, h: &Heap, k: usize) -> bool {
    let mut right_labels = shape.right_gens();
    for i in k..=shape.n - 1 {
        right_labels.push(shape.s(i));
    }
    match restriction_chain(h, &right_labels) {
        Some(word) => {
            if word != shape.right_peak_word(k) {
                return false;
            }
        }
        None => return false,
    }
    let sk = ids_with_label(h, shape.s(k));
    debug_assert_eq!(sk.len(), 2);
    let blocker: Vec<Gen> = if k != 1 {
        vec![shape.s(k - 1)]
    } else {
        shape.left_gens()
    };
    !h.strictly_between(sk[0], sk[1])
        .iter()
        .any(|&x| blocker.contains(&h.label(x)))
}

fn is_zigzag_ctilde(shape: &Shape, h: &Heap) -> bool {
    // zigzags are chains whose word is a factor of the doubly infinite
    // period, with at least three copies of some path generator
    let Some(ids) = h.chain_ids(|_| true) else {
        return false;
    };
    let word: Vec<Gen> = ids.iter().map(|&i| h.label(i)).collect();
    let period = shape.zigzag_period();
    let p = period.len();
    let is_factor = (0..p).any(|off| (0..word.len()).all(|i| word[i] == period[(off + i) % p]));
    if !is_factor {
        return false;
    }
    (1..=shape.n - 1).any(|i| ids_with_label(h, shape.s(i)).len() >= 3)
}

/// All family labels whose defining clauses the heap satisfies. The
/// classification theorem promises exactly one for an FC heap over the
/// unforked diagram.
fn matching_labels(graph: &CoxeterGraph, shape: &Shape, h: &Heap) -> Vec<FamilyLabel> {
    let mut found = Vec::new();
    if h.is_alternating(graph) {
        found.push(FamilyLabel::plain(FiveFamily::Alt));
    }
    if is_zigzag_ctilde(shape, h) {
        found.push(FamilyLabel::plain(FiveFamily::Zz));
    }
    let n = shape.n;
    for j in 1..=n - 1 {
        if left_peak_at(shape, h, j) {
            // (3) the right part is alternating once one s_j is removed
            let mut labels = shape.right_gens();
            for i in j..=n - 1 {
                labels.push(shape.s(i));
            }
            let upper_sj = *ids_with_label(h, shape.s(j)).last().unwrap();
            if alternating_within(graph, h, &labels, &[upper_sj]) {
                found.push(FamilyLabel {
                    family: FiveFamily::Lp,
                    j: Some(j),
                    k: None,
                    decoration: Decoration::None,
                });
            }
        }
    }
    for k in 1..=n - 1 {
        if right_peak_at(shape, h, k) {
            let mut labels = shape.left_gens();
            for i in 1..=k {
                labels.push(shape.s(i));
            }
            let lower_sk = ids_with_label(h, shape.s(k))[0];
            if alternating_within(graph, h, &labels, &[lower_sk]) {
                found.push(FamilyLabel {
                    family: FiveFamily::Rp,
                    j: None,
                    k: Some(k),
                    decoration: Decoration::None,
                });
            }
        }
    }
    for j in 1..=n - 1 {
        for k in j + 1..=n - 1 {
            if left_peak_at(shape, h, j) && right_peak_at(shape, h, k) {
                let labels: Vec<Gen> = (j..=k).map(|i| shape.s(i)).collect();
                let upper_sj = *ids_with_label(h, shape.s(j)).last().unwrap();
                let lower_sk = ids_with_label(h, shape.s(k))[0];
                if alternating_within(graph, h, &labels, &[upper_sj, lower_sk]) {
                    found.push(FamilyLabel {
                        family: FiveFamily::Lrp,
                        j: Some(j),
                        k: Some(k),
                        decoration: Decoration::None,
                    });
                }
            }
        }
    }
    found
}

/// Classify an FC heap over the unforked affine diagram into exactly one of
/// the five families.
pub fn classify_ctilde(graph: &CoxeterGraph, h: &Heap) -> Result<FamilyLabel, FamilyError> {
    let shape = Shape::of(graph).filter(|s| s.kind == Family::CTilde).expect(
        "classify_ctilde needs a Ctilde-tagged graph",
    );
    if !h.is_fc(graph) {
        return Err(FamilyError::NotFc);
    }
    let found = matching_labels(graph, &shape, h);
    match found.as_slice() {
        [one] => Ok(*one),
        [] => Err(FamilyError::ClassificationFailure(format!(
            "no family matches heap {:?}",
            h.canonical_word()
        ))),
        many => Err(FamilyError::ClassificationFailure(format!(
            "{} families match heap {:?}",
            many.len(),
            h.canonical_word()
        ))),
    }
}

// ---------------------------------------------------------------------------
// Fork substitutions
// ---------------------------------------------------------------------------

/// Replacement choice for one end-generator occurrence.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Repl {
    Pair,
    Lo,
    Hi,
}

/// Assignment lists for the occurrences of one end generator.
///
/// `forced_pair`: peak families pin the unique occurrence to the pair.
/// `zigzag`: boundary occurrences (word starts or ends with the generator)
/// are free, interior ones become pairs.
/// `special`: the full-width peak heap, where every occurrence is free.
/// Otherwise: zero occurrences change nothing, a single one is free, and two
/// or more alternate between the fork generators in the two possible ways.
fn side_assignments(
    count: usize,
    forced_pair: bool,
    zigzag: Option<(bool, bool)>,
    special: bool,
) -> Vec<Vec<Repl>> {
    if count == 0 {
        return vec![Vec::new()];
    }
    if forced_pair {
        debug_assert_eq!(count, 1, "peak families have a unique end element");
        return vec![vec![Repl::Pair]];
    }
    if special {
        let mut out = vec![Vec::new()];
        for _ in 0..count {
            out = out
                .into_iter()
                .flat_map(|a| {
                    [Repl::Pair, Repl::Lo, Repl::Hi].into_iter().map(move |r| {
                        let mut a = a.clone();
                        a.push(r);
                        a
                    })
                })
                .collect();
        }
        return out;
    }
    if let Some((starts, ends)) = zigzag {
        debug_assert!(count >= 2 || !(starts && ends));
        let firsts: &[Repl] = if starts {
            &[Repl::Pair, Repl::Lo, Repl::Hi]
        } else {
            &[Repl::Pair]
        };
        let lasts: &[Repl] = if ends {
            &[Repl::Pair, Repl::Lo, Repl::Hi]
        } else {
            &[Repl::Pair]
        };
        let mut out = Vec::new();
        for &f in firsts {
            for &l in lasts {
                let mut a = vec![Repl::Pair; count];
                a[0] = f;
                *a.last_mut().unwrap() = l;
                out.push(a);
            }
        }
        return out;
    }
    if count == 1 {
        return vec![vec![Repl::Pair], vec![Repl::Lo], vec![Repl::Hi]];
    }
    let alternating = |first: Repl, second: Repl| -> Vec<Repl> {
        (0..count)
            .map(|i| if i % 2 == 0 { first } else { second })
            .collect()
    };
    vec![
        alternating(Repl::Lo, Repl::Hi),
        alternating(Repl::Hi, Repl::Lo),
    ]
}

/// The two full-width peak heaps whose end occurrences are substituted
/// independently.
fn special_words(shape: &Shape) -> (Word, Word) {
    let n = shape.n;
    let mut t_side = vec![Gen(0)];
    t_side.extend(shape.right_peak_word(1));
    t_side.push(Gen(0));
    let mut u_side = vec![Gen(n as u8)];
    u_side.extend(shape.left_peak_word(n - 1));
    u_side.push(Gen(n as u8));
    (Word::new(t_side), Word::new(u_side))
}

struct SubstitutionPlan {
    word: Word,
    t_assignments: Vec<Vec<Repl>>,
    u_assignments: Vec<Vec<Repl>>,
}

/// Work out the replacement assignments for both ends of an FC heap over the
/// unforked diagram.
fn substitution_plan(graph: &CoxeterGraph, h: &Heap) -> Result<SubstitutionPlan, FamilyError> {
    let shape = Shape::of(graph).filter(|s| s.kind == Family::CTilde).expect(
        "substitutions start from a Ctilde-tagged graph",
    );
    let label = classify_ctilde(graph, h)?;
    let word = h.canonical_word();
    let t = Gen(0);
    let u = Gen(shape.n as u8);
    let count_t = word.letters.iter().filter(|&&g| g == t).count();
    let count_u = word.letters.iter().filter(|&&g| g == u).count();
    let (t_special_word, u_special_word) = special_words(&shape);
    let is_t_special = h.canonical_word() == Heap::of_word(graph, &t_special_word).canonical_word();
    let is_u_special = h.canonical_word() == Heap::of_word(graph, &u_special_word).canonical_word();
    // for zigzags the heap is a chain, so the canonical word is the word
    let zz_t = (label.family == FiveFamily::Zz).then(|| {
        (
            word.letters.first() == Some(&t),
            word.letters.last() == Some(&t),
        )
    });
    let zz_u = (label.family == FiveFamily::Zz).then(|| {
        (
            word.letters.first() == Some(&u),
            word.letters.last() == Some(&u),
        )
    });
    let t_forced = matches!(label.family, FiveFamily::Lp | FiveFamily::Lrp);
    let u_forced = matches!(label.family, FiveFamily::Rp | FiveFamily::Lrp);
    Ok(SubstitutionPlan {
        word,
        t_assignments: side_assignments(count_t, t_forced, zz_t, is_t_special),
        u_assignments: side_assignments(count_u, u_forced, zz_u, is_u_special),
    })
}

/// Apply one assignment pair to the word, mapping into the target diagram.
///
/// `fork_left`/`fork_right` say whether the target forks the corresponding
/// end into two generators.
fn substituted_word(
    shape: &Shape,
    plan_word: &Word,
    t_assign: &[Repl],
    u_assign: &[Repl],
    fork_right: bool,
) -> Word {
    let n = shape.n;
    let mut out = Vec::with_capacity(plan_word.len() + 2);
    let (mut ti, mut ui) = (0, 0);
    for &g in &plan_word.letters {
        if g == Gen(0) {
            let lo = Gen(0);
            let hi = Gen(1);
            match t_assign[ti] {
                Repl::Pair => {
                    out.push(lo);
                    out.push(hi);
                }
                Repl::Lo => out.push(lo),
                Repl::Hi => out.push(hi),
            }
            ti += 1;
        } else if g == Gen(n as u8) {
            if fork_right {
                let lo = Gen(n as u8 + 1);
                let hi = Gen(n as u8 + 2);
                match u_assign[ui] {
                    Repl::Pair => {
                        out.push(lo);
                        out.push(hi);
                    }
                    Repl::Lo => out.push(lo),
                    Repl::Hi => out.push(hi),
                }
                ui += 1;
            } else {
                out.push(Gen(n as u8 + 1));
            }
        } else {
            out.push(Gen(g.0 + 1));
        }
    }
    Word::new(out)
}

/// The set of FC heaps over the singly forked diagram obtained by replacing
/// the left end generator: peak families force the pair, zigzag boundaries
/// and single occurrences are free, and repeated occurrences alternate.
pub fn delta_t(
    c_graph: &CoxeterGraph,
    h: &Heap,
    b_graph: &CoxeterGraph,
) -> Result<Vec<Heap>, FamilyError> {
    let shape = Shape::of(c_graph).expect("substitutions start from a Ctilde-tagged graph");
    debug_assert_eq!(
        Shape::of(b_graph).map(|s| (s.kind, s.n)),
        Some((Family::BTilde, shape.n))
    );
    let plan = substitution_plan(c_graph, h)?;
    let mut out = Vec::new();
    for t_assign in &plan.t_assignments {
        let word = substituted_word(&shape, &plan.word, t_assign, &[], false);
        let heap = Heap::of_word(b_graph, &word);
        debug_assert!(heap.is_fc(b_graph));
        out.push(heap);
    }
    Ok(out)
}

/// Both substitutions at once, producing FC heaps over the doubly forked
/// diagram; the choice sets multiply.
pub fn delta_tu(
    c_graph: &CoxeterGraph,
    h: &Heap,
    d_graph: &CoxeterGraph,
) -> Result<Vec<Heap>, FamilyError> {
    let shape = Shape::of(c_graph).expect("substitutions start from a Ctilde-tagged graph");
    debug_assert_eq!(
        Shape::of(d_graph).map(|s| (s.kind, s.n)),
        Some((Family::DTilde, shape.n))
    );
    let plan = substitution_plan(c_graph, h)?;
    let mut out = Vec::new();
    for t_assign in &plan.t_assignments {
        for u_assign in &plan.u_assignments {
            let word = substituted_word(&shape, &plan.word, t_assign, u_assign, true);
            let heap = Heap::of_word(d_graph, &word);
            debug_assert!(heap.is_fc(d_graph));
            out.push(heap);
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Inverting the substitutions
// ---------------------------------------------------------------------------

/// Collapse the forked end generators of an FC heap back onto the unforked
/// diagram: fork elements sharing the same gap between consecutive anchor
/// elements came from one original element.
fn collapse_word(shape: &Shape, h: &Heap) -> Word {
    let n = shape.n;
    let t_gens = shape.left_gens();
    let u_gens = shape.right_gens();
    let s1 = shape.s(1);
    let s_last = shape.s(n - 1);
    let gap_below = |anchor: Gen, x: usize| -> usize {
        (0..h.len())
            .filter(|&i| h.label(i) == anchor && h.lt(i, x))
            .count()
    };
    let mut out = Vec::new();
    let mut seen_t_gaps = Vec::new();
    let mut seen_u_gaps = Vec::new();
    for i in 0..h.len() {
        let g = h.label(i);
        if t_gens.contains(&g) {
            let gap = gap_below(s1, i);
            if !seen_t_gaps.contains(&gap) {
                seen_t_gaps.push(gap);
                out.push(Gen(0));
            }
        } else if u_gens.contains(&g) {
            if u_gens.len() == 1 {
                out.push(Gen(n as u8));
            } else {
                let gap = gap_below(s_last, i);
                if !seen_u_gaps.contains(&gap) {
                    seen_u_gaps.push(gap);
                    out.push(Gen(n as u8));
                }
            }
        } else {
            out.push(Gen(g.0 - 1));
        }
    }
    Word::new(out)
}

/// Classify an FC heap over a forked diagram by inverting the substitution:
/// collapse, classify the underlying heap, and verify that the heap really
/// lies in the substitution image of the collapse.
pub fn classify_bd(
    bd_graph: &CoxeterGraph,
    h: &Heap,
    c_graph: &CoxeterGraph,
) -> Result<(FamilyLabel, Heap), FamilyError> {
    let shape = Shape::of(bd_graph).expect("classify_bd needs a forked-diagram graph");
    assert!(matches!(shape.kind, Family::BTilde | Family::DTilde));
    debug_assert_eq!(
        Shape::of(c_graph).map(|s| (s.kind, s.n)),
        Some((Family::CTilde, shape.n))
    );
    if !h.is_fc(bd_graph) {
        return Err(FamilyError::NotFc);
    }
    let collapsed = collapse_word(&shape, h);
    let underlying = Heap::of_word(c_graph, &collapsed);
    let mut label = classify_ctilde(c_graph, &underlying).map_err(|e| match e {
        FamilyError::NotFc => FamilyError::ClassificationFailure(
            "collapsed heap is not fully commutative".to_string(),
        ),
        other => other,
    })?;
    let images = match shape.kind {
        Family::BTilde => delta_t(c_graph, &underlying, bd_graph)?,
        _ => delta_tu(c_graph, &underlying, bd_graph)?,
    };
    let target = h.canonical_word();
    if !images.iter().any(|img| img.canonical_word() == target) {
        return Err(FamilyError::ClassificationFailure(format!(
            "heap {:?} is not in the substitution image of its collapse",
            target
        )));
    }
    label.decoration = match shape.kind {
        Family::BTilde => Decoration::Btilde,
        _ => Decoration::Dtilde,
    };
    Ok((label, underlying))
}

// ---------------------------------------------------------------------------
// Structure lemmas
// ---------------------------------------------------------------------------

/// Check, on a concrete FC heap over one of the three classical affine
/// diagrams, the structural facts the classification proof rests on: the
/// chain of two consecutive path generators never contains the forbidden
/// factors `s_i s_{i-1} s_i s_i`, `s_i s_i s_{i-1} s_i`, `s_i s_i s_i`, and
/// the interval between any consecutive pair `s_i s_i` is a right peak.
pub fn assert_structure_lemmas(graph: &CoxeterGraph, h: &Heap) -> Result<(), FamilyError> {
    let shape = Shape::of(graph).expect("structure lemmas apply to the classical affine diagrams");
    if !h.is_fc(graph) {
        return Err(FamilyError::NotFc);
    }
    let n = shape.n;
    for i in 2..=n.saturating_sub(1) {
        let lo = shape.s(i - 1);
        let hi = shape.s(i);
        let ids = h
            .chain_ids(|g| g == lo || g == hi)
            .expect("bonded pairs restrict to chains");
        let labels: Vec<Gen> = ids.iter().map(|&x| h.label(x)).collect();
        let forbidden: [&[Gen]; 3] = [&[hi, lo, hi, hi], &[hi, hi, lo, hi], &[hi, hi, hi]];
        for f in forbidden {
            if labels.windows(f.len()).any(|w| w == f) {
                return Err(FamilyError::LemmaViolation(format!(
                    "forbidden factor at path index {i} in {:?}",
                    h.canonical_word()
                )));
            }
        }
        let peak = Word::new(shape.right_peak_word(i));
        let peak_heap = Heap::of_word(graph, &peak);
        for w in ids.windows(2) {
            if labels[ids.iter().position(|&x| x == w[0]).unwrap()] != hi
                || h.label(w[1]) != hi
            {
                continue;
            }
            // interval between the two s_i elements, in id order
            let mut interval = vec![w[0]];
            interval.extend(h.strictly_between(w[0], w[1]));
            interval.sort_unstable();
            interval.push(w[1]);
            let interval_word = Word::new(interval.iter().map(|&x| h.label(x)).collect());
            let interval_heap = Heap::of_word(graph, &interval_word);
            if !interval_heap.is_isomorphic(&peak_heap) {
                return Err(FamilyError::LemmaViolation(format!(
                    "interval between repeated s_{i} is not the right peak in {:?}",
                    h.canonical_word()
                )));
            }
        }
    }
    Ok(())
}
