//! Two-tape automata over `(Σ ∪ {ε}) × (Σ ∪ {ε})` and rational transductions.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::strongly_connected_components;
use crate::regular::{useful_states, CombineOp, Nfa};
use crate::words::{Alphabet, Letter, Word};

/// A pair label; `None` on a tape is ε.
pub type PairLabel = (Option<Letter>, Option<Letter>);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TEdge {
    pub from: usize,
    pub label: PairLabel,
    pub to: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tape {
    First,
    Second,
}

/// A finite automaton with pair labels; it accepts the relation formed by the
/// labels of its successful paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transducer {
    alphabet: Arc<Alphabet>,
    states: usize,
    edges: Vec<TEdge>,
    initial: usize,
    terminals: BTreeSet<usize>,
}

impl Transducer {
    pub fn new(alphabet: Arc<Alphabet>, states: usize, initial: usize) -> Self {
        assert!(initial < states.max(1), "initial state out of range");
        Transducer {
            alphabet,
            states: states.max(1),
            edges: Vec::new(),
            initial,
            terminals: BTreeSet::new(),
        }
    }

    pub fn empty(alphabet: Arc<Alphabet>) -> Self {
        Transducer::new(alphabet, 1, 0)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.states
    }

    pub fn edges(&self) -> &[TEdge] {
        &self.edges
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn terminals(&self) -> &BTreeSet<usize> {
        &self.terminals
    }

    pub fn add_state(&mut self) -> usize {
        self.states += 1;
        self.states - 1
    }

    pub fn add_edge(&mut self, from: usize, label: PairLabel, to: usize) {
        assert!(from < self.states && to < self.states, "edge endpoint out of range");
        self.edges.push(TEdge { from, label, to });
    }

    pub fn add_terminal(&mut self, s: usize) {
        assert!(s < self.states);
        self.terminals.insert(s);
    }

    pub fn set_terminals(&mut self, terminals: impl IntoIterator<Item = usize>) {
        self.terminals = terminals.into_iter().collect();
    }

    pub fn normalize(&mut self) {
        self.edges.sort();
        self.edges.dedup();
    }

    pub(crate) fn out_edges(&self) -> Vec<Vec<(PairLabel, usize)>> {
        let mut out = vec![Vec::new(); self.states];
        for e in &self.edges {
            out[e.from].push((e.label, e.to));
        }
        out
    }

    pub(crate) fn embed(&mut self, other: &Transducer) -> usize {
        let off = self.states;
        self.states += other.states;
        self.edges.extend(other.edges.iter().map(|e| TEdge {
            from: e.from + off,
            label: e.label,
            to: e.to + off,
        }));
        off
    }

    /// Relabels every edge with `f`.
    pub fn map_labels(&self, f: impl Fn(PairLabel) -> PairLabel) -> Transducer {
        let mut t = self.clone();
        for e in &mut t.edges {
            e.label = f(e.label);
        }
        t
    }

    /// `{(v, u) : (u, v) ∈ τ}`.
    pub fn swap_tapes(&self) -> Transducer {
        self.map_labels(|(a, b)| (b, a))
    }

    /// Minimum total number of letters (both tapes) needed to reach a terminal.
    pub(crate) fn distance_to_terminal(&self) -> Vec<usize> {
        let mut rev = vec![Vec::new(); self.states];
        for e in &self.edges {
            let w = e.label.0.is_some() as usize + e.label.1.is_some() as usize;
            rev[e.to].push((w, e.from));
        }
        let mut dist = vec![usize::MAX; self.states];
        let mut heap = std::collections::BinaryHeap::new();
        for &t in &self.terminals {
            dist[t] = 0;
            heap.push(std::cmp::Reverse((0usize, t)));
        }
        while let Some(std::cmp::Reverse((d, v))) = heap.pop() {
            if d > dist[v] {
                continue;
            }
            for &(w, u) in &rev[v] {
                if d + w < dist[u] {
                    dist[u] = d + w;
                    heap.push(std::cmp::Reverse((d + w, u)));
                }
            }
        }
        dist
    }

    fn check_alphabet(&self, other: &Arc<Alphabet>) -> Result<()> {
        if &self.alphabet == other {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }
}

/// True iff `(u, v)` labels a successful path.
pub fn accepts_pair(t: &Transducer, u: &Word, v: &Word) -> bool {
    let out = t.out_edges();
    let mut seen: HashSet<(usize, usize, usize)> = HashSet::new();
    let mut stack = vec![(t.initial, 0usize, 0usize)];
    seen.insert((t.initial, 0, 0));
    while let Some((s, i, j)) = stack.pop() {
        if i == u.len() && j == v.len() && t.terminals.contains(&s) {
            return true;
        }
        for &((a, b), to) in &out[s] {
            let ni = match a {
                None => i,
                Some(x) if i < u.len() && u[i] == x => i + 1,
                Some(_) => continue,
            };
            let nj = match b {
                None => j,
                Some(y) if j < v.len() && v[j] == y => j + 1,
                Some(_) => continue,
            };
            if seen.insert((to, ni, nj)) {
                stack.push((to, ni, nj));
            }
        }
    }
    false
}

/// Removes states and edges that lie on no successful path.
pub fn trim_t(t: &Transducer) -> Transducer {
    let useful = useful_states(
        t.states,
        t.initial,
        &t.terminals,
        t.edges.iter().map(|e| (e.from, e.to)),
    );
    if !useful[t.initial] {
        return Transducer::empty(t.alphabet.clone());
    }
    let mut remap = vec![usize::MAX; t.states];
    let mut n = 0;
    for (s, &u) in useful.iter().enumerate() {
        if u {
            remap[s] = n;
            n += 1;
        }
    }
    let mut out = Transducer::new(t.alphabet.clone(), n, remap[t.initial]);
    for e in &t.edges {
        if useful[e.from] && useful[e.to] {
            out.edges.push(TEdge {
                from: remap[e.from],
                label: e.label,
                to: remap[e.to],
            });
        }
    }
    out.terminals = t.terminals.iter().filter(|&&s| useful[s]).map(|&s| remap[s]).collect();
    out.normalize();
    out
}

/// Union through a fresh initial state with `(ε,ε)` edges, or the pairwise
/// product through `(ε,ε)` edges from the terminals of `s` to the initial state of `t`.
pub fn combine_t(op: CombineOp, s: &Transducer, t: &Transducer) -> Result<Transducer> {
    s.check_alphabet(&t.alphabet)?;
    match op {
        CombineOp::Union => {
            let mut out = Transducer::new(s.alphabet.clone(), 1, 0);
            let os = out.embed(s);
            let ot = out.embed(t);
            out.add_edge(0, (None, None), s.initial + os);
            out.add_edge(0, (None, None), t.initial + ot);
            out.terminals = s
                .terminals
                .iter()
                .map(|x| x + os)
                .chain(t.terminals.iter().map(|x| x + ot))
                .collect();
            Ok(out)
        }
        CombineOp::Concat => {
            let mut out = s.clone();
            let ot = out.embed(t);
            for &x in &s.terminals {
                out.add_edge(x, (None, None), t.initial + ot);
            }
            out.terminals = t.terminals.iter().map(|x| x + ot).collect();
            Ok(out)
        }
    }
}

/// `τ ∩ (L(r) × L(s))` by the product construction in which each factor may
/// stand still (the ε-loop convention), built from the reachable part only.
pub fn intersect_rect(t: &Transducer, r: &Nfa, s: &Nfa) -> Result<Transducer> {
    t.check_alphabet(r.alphabet())?;
    t.check_alphabet(s.alphabet())?;
    let tout = t.out_edges();
    let rout = r.out_edges();
    let sout = s.out_edges();
    let mut index: HashMap<(usize, usize, usize), usize> = HashMap::new();
    let mut states: Vec<(usize, usize, usize)> = Vec::new();
    let start = (t.initial, r.initial(), s.initial());
    index.insert(start, 0);
    states.push(start);
    let mut out = Transducer::new(t.alphabet.clone(), 1, 0);
    let mut i = 0;
    while i < states.len() {
        let (p, x, y) = states[i];
        let mut moves: Vec<(PairLabel, (usize, usize, usize))> = Vec::new();
        for &((a, b), p2) in &tout[p] {
            let xs: Vec<usize> = match a {
                None => vec![x],
                Some(a) => rout[x].iter().filter(|(l, _)| *l == Some(a)).map(|&(_, q)| q).collect(),
            };
            let ys: Vec<usize> = match b {
                None => vec![y],
                Some(b) => sout[y].iter().filter(|(l, _)| *l == Some(b)).map(|&(_, q)| q).collect(),
            };
            for &x2 in &xs {
                for &y2 in &ys {
                    moves.push(((a, b), (p2, x2, y2)));
                }
            }
        }
        for &(l, x2) in &rout[x] {
            if l.is_none() {
                moves.push(((None, None), (p, x2, y)));
            }
        }
        for &(l, y2) in &sout[y] {
            if l.is_none() {
                moves.push(((None, None), (p, x, y2)));
            }
        }
        for (label, target) in moves {
            let id = match index.get(&target) {
                Some(&id) => id,
                None => {
                    let id = states.len();
                    index.insert(target, id);
                    states.push(target);
                    out.add_state();
                    id
                }
            };
            out.add_edge(i, label, id);
        }
        i += 1;
    }
    for (id, &(p, x, y)) in states.iter().enumerate() {
        if t.terminals.contains(&p) && r.terminals().contains(&x) && s.terminals().contains(&y) {
            out.terminals.insert(id);
        }
    }
    Ok(trim_t(&out))
}

/// The identity relation on `Σ*`: one state with a loop `(a,a)` for every letter.
pub fn identity_sigma_star(alphabet: Arc<Alphabet>) -> Transducer {
    let mut t = Transducer::new(alphabet.clone(), 1, 0);
    for x in alphabet.letters() {
        t.add_edge(0, (Some(x), Some(x)), 0);
    }
    t.add_terminal(0);
    t
}

/// `{(u, u) : u ∈ L(r)}`, obtained as the identity on `Σ*` intersected with `R × R`.
pub fn identity_of(r: &Nfa) -> Transducer {
    let id = identity_sigma_star(r.alphabet().clone());
    intersect_rect(&id, r, r).expect("same alphabet")
}

/// A transducer for a finite relation, one aligned chain per pair.
pub fn from_pairs<'a>(alphabet: Arc<Alphabet>, pairs: impl IntoIterator<Item = &'a (Word, Word)>) -> Transducer {
    let mut t = Transducer::new(alphabet, 1, 0);
    for (u, v) in pairs {
        let mut cur = 0;
        for i in 0..u.len().max(v.len()) {
            let next = t.add_state();
            t.add_edge(cur, (u.get(i).copied(), v.get(i).copied()), next);
            cur = next;
        }
        t.add_terminal(cur);
    }
    t
}

/// Projection of the relation onto one tape.
pub fn project(t: &Transducer, tape: Tape) -> Nfa {
    let mut a = Nfa::new(t.alphabet.clone(), t.states, t.initial);
    for e in &t.edges {
        let l = match tape {
            Tape::First => e.label.0,
            Tape::Second => e.label.1,
        };
        a.add_edge(e.from, l, e.to);
    }
    a.set_terminals(t.terminals.iter().copied());
    a.normalize();
    a
}

/// Collapses every cycle of `(ε,ε)` edges to a single state, discarding the
/// edges inside it; the merged state is initial or terminal if a member was.
pub fn strip_epsilon_cycles(t: &Transducer) -> Transducer {
    let mut adj = vec![Vec::new(); t.states];
    for e in &t.edges {
        if e.label == (None, None) {
            adj[e.from].push(e.to);
        }
    }
    let (comp, count) = strongly_connected_components(t.states, &adj);
    // number components by their least member so acyclic inputs are unchanged
    let mut first = vec![usize::MAX; count];
    for v in 0..t.states {
        first[comp[v]] = first[comp[v]].min(v);
    }
    let mut order: Vec<usize> = (0..count).collect();
    order.sort_by_key(|&c| first[c]);
    let mut rank = vec![0; count];
    for (i, &c) in order.iter().enumerate() {
        rank[c] = i;
    }
    let id = |v: usize| rank[comp[v]];
    let mut out = Transducer::new(t.alphabet.clone(), count, id(t.initial));
    for e in &t.edges {
        let (f, to) = (id(e.from), id(e.to));
        if e.label == (None, None) && f == to {
            continue;
        }
        out.edges.push(TEdge {
            from: f,
            label: e.label,
            to,
        });
    }
    out.terminals = t.terminals.iter().map(|&v| id(v)).collect();
    out.normalize();
    out
}

/// Tape-length imbalance `|a| - |b|` of a label.
pub(crate) fn imbalance(label: PairLabel) -> i64 {
    label.0.is_some() as i64 - label.1.is_some() as i64
}

/// Potentials `φ` with `φ(to) − φ(from) = imbalance` on every edge inside a
/// strongly connected component; they exist iff every cycle is balanced.
pub(crate) fn balance_potentials(t: &Transducer) -> Option<(Vec<i64>, Vec<usize>, usize)> {
    let mut adj = vec![Vec::new(); t.states];
    for e in &t.edges {
        adj[e.from].push(e.to);
    }
    let (comp, count) = strongly_connected_components(t.states, &adj);
    let mut inner: Vec<Vec<(usize, i64)>> = vec![Vec::new(); t.states];
    for e in &t.edges {
        if comp[e.from] == comp[e.to] {
            let w = imbalance(e.label);
            inner[e.from].push((e.to, w));
            inner[e.to].push((e.from, -w));
        }
    }
    let mut phi: Vec<Option<i64>> = vec![None; t.states];
    for root in 0..t.states {
        if phi[root].is_some() {
            continue;
        }
        phi[root] = Some(0);
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            let pv = phi[v].unwrap_or(0);
            for &(w, d) in &inner[v] {
                match phi[w] {
                    None => {
                        phi[w] = Some(pv + d);
                        stack.push(w);
                    }
                    Some(pw) if pw != pv + d => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some((phi.into_iter().map(|p| p.unwrap_or(0)).collect(), comp, count))
}

/// The least `k` with `||u| − |v|| ≤ k` for every accepted pair, or `None`
/// when some cycle is unbalanced (the difference is then unbounded).
pub fn synchronized_bound(t: &Transducer) -> Option<usize> {
    let t = trim_t(&strip_epsilon_cycles(&trim_t(t)));
    if t.terminals.is_empty() {
        return Some(0);
    }
    let (phi, comp, count) = balance_potentials(&t)?;
    let mut members = vec![Vec::new(); count];
    for v in 0..t.states {
        members[comp[v]].push(v);
    }
    let mut cand_max: Vec<Option<i64>> = vec![None; t.states];
    let mut cand_min: Vec<Option<i64>> = vec![None; t.states];
    cand_max[t.initial] = Some(0);
    cand_min[t.initial] = Some(0);
    let mut best_max = vec![None; t.states];
    let mut best_min = vec![None; t.states];
    let out = t.out_edges();
    // sources first: Tarjan numbers sinks first
    for c in (0..count).rev() {
        let emax = members[c].iter().filter_map(|&v| cand_max[v].map(|x| x - phi[v])).max();
        let emin = members[c].iter().filter_map(|&v| cand_min[v].map(|x| x - phi[v])).min();
        let (Some(emax), Some(emin)) = (emax, emin) else {
            continue;
        };
        for &v in &members[c] {
            best_max[v] = Some(emax + phi[v]);
            best_min[v] = Some(emin + phi[v]);
        }
        for &v in &members[c] {
            for &(label, w) in &out[v] {
                if comp[w] != c {
                    let d = imbalance(label);
                    let hi = best_max[v].unwrap() + d;
                    let lo = best_min[v].unwrap() + d;
                    cand_max[w] = Some(cand_max[w].map_or(hi, |x: i64| x.max(hi)));
                    cand_min[w] = Some(cand_min[w].map_or(lo, |x: i64| x.min(lo)));
                }
            }
        }
    }
    t.terminals
        .iter()
        .filter_map(|&s| Some(best_max[s]?.abs().max(best_min[s]?.abs())))
        .max()
        .map(|k| k as usize)
}

/// Structural test for the synchronized shape: a core with labels in `Σ×Σ`
/// plus one-sided tails attached at their initial points and otherwise disjoint.
pub fn has_synchronized_shape(t: &Transducer) -> bool {
    let t = trim_t(t);
    let one_sided = |l: PairLabel| l.0.is_some() != l.1.is_some();
    if t.edges.iter().any(|e| e.label == (None, None)) {
        return false;
    }
    let mut in_edges = vec![Vec::new(); t.states];
    let mut out_edges = vec![Vec::new(); t.states];
    for e in &t.edges {
        in_edges[e.to].push(*e);
        out_edges[e.from].push(*e);
    }
    let on_tail: Vec<bool> = (0..t.states)
        .map(|v| in_edges[v].iter().any(|e| one_sided(e.label)))
        .collect();
    for v in 0..t.states {
        if !on_tail[v] {
            continue;
        }
        if v == t.initial || in_edges[v].len() != 1 || out_edges[v].len() > 1 {
            return false;
        }
        let side = in_edges[v][0].label.0.is_some();
        if out_edges[v]
            .iter()
            .any(|e| !one_sided(e.label) || e.label.0.is_some() != side)
        {
            return false;
        }
    }
    true
}

/// All accepted pairs with `|u| ≤ max_first` and `|v| ≤ max_second`.
pub fn enumerate_pairs(t: &Transducer, max_first: usize, max_second: usize) -> BTreeSet<(Word, Word)> {
    enumerate_pairs_where(t, max_first + max_second, |u, v| u <= max_first && v <= max_second)
}

/// All accepted pairs with `|u| + |v| ≤ total`.
pub fn enumerate_pairs_total(t: &Transducer, total: usize) -> BTreeSet<(Word, Word)> {
    enumerate_pairs_where(t, total, |_, _| true)
}

fn enumerate_pairs_where(t: &Transducer, total: usize, fits: impl Fn(usize, usize) -> bool) -> BTreeSet<(Word, Word)> {
    let t = trim_t(t);
    let mut result = BTreeSet::new();
    if t.terminals.is_empty() {
        return result;
    }
    let out = t.out_edges();
    let dist = t.distance_to_terminal();
    let mut seen: HashSet<(usize, Word, Word)> = HashSet::new();
    let mut queue = VecDeque::new();
    let start = (t.initial, Word::empty(), Word::empty());
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some((s, u, v)) = queue.pop_front() {
        if t.terminals.contains(&s) {
            result.insert((u.clone(), v.clone()));
        }
        for &((a, b), to) in &out[s] {
            let nu = u.len() + a.is_some() as usize;
            let nv = v.len() + b.is_some() as usize;
            if nu + nv + dist[to] > total || !fits(nu, nv) {
                continue;
            }
            let mut u2 = u.clone();
            let mut v2 = v.clone();
            u2.0.extend(a);
            v2.0.extend(b);
            let key = (to, u2, v2);
            if !seen.contains(&key) {
                seen.insert(key.clone());
                queue.push_back(key);
            }
        }
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regular::{enumerate, equivalent};

    fn al() -> Arc<Alphabet> {
        Arc::new(Alphabet::with_inverses(&["a", "b"]).unwrap())
    }

    fn w(s: &str) -> Word {
        al().parse_word(s).unwrap()
    }

    fn l(s: &str) -> Option<Letter> {
        Some(al().letter(s).unwrap())
    }

    /// (aⁿ, bⁿ)
    fn an_bn() -> Transducer {
        let mut t = Transducer::new(al(), 1, 0);
        t.add_edge(0, (l("a"), l("b")), 0);
        t.add_terminal(0);
        t
    }

    /// (aⁿb, aⁿ)
    fn an_b_an() -> Transducer {
        let mut t = Transducer::new(al(), 2, 0);
        t.add_edge(0, (l("a"), l("a")), 0);
        t.add_edge(0, (l("b"), None), 1);
        t.add_terminal(1);
        t
    }

    #[test]
    fn accepts_pair_examples() {
        let id = identity_sigma_star(al());
        assert!(accepts_pair(&id, &w("a"), &w("a")));
        assert!(!accepts_pair(&id, &w("a"), &w("b")));
        assert!(accepts_pair(&an_bn(), &w("aa"), &w("bb")));
        assert!(!accepts_pair(&an_bn(), &w("aa"), &w("b")));
    }

    #[test]
    fn combine_examples() {
        let p = from_pairs(al(), &[(w("a"), w("b"))]);
        let q = from_pairs(al(), &[(w("b"), w("a"))]);
        let u = combine_t(CombineOp::Union, &p, &q).unwrap();
        let expected: BTreeSet<_> = [(w("a"), w("b")), (w("b"), w("a"))].into_iter().collect();
        assert_eq!(enumerate_pairs(&u, 6, 6), expected);
        let c = combine_t(CombineOp::Concat, &p, &q).unwrap();
        let expected: BTreeSet<_> = [(w("ab"), w("ba"))].into_iter().collect();
        assert_eq!(enumerate_pairs(&c, 6, 6), expected);
        let e = combine_t(CombineOp::Union, &an_bn(), &Transducer::empty(al())).unwrap();
        assert_eq!(enumerate_pairs(&e, 6, 6), enumerate_pairs(&an_bn(), 6, 6));
    }

    #[test]
    fn intersect_rect_examples() {
        let id = identity_sigma_star(al());
        let only_a = Nfa::from_words(al(), [&w("a")]);
        let all = Nfa::universal(al());
        let r = intersect_rect(&id, &only_a, &all).unwrap();
        let expected: BTreeSet<_> = [(w("a"), w("a"))].into_iter().collect();
        assert_eq!(enumerate_pairs(&r, 6, 6), expected);
        let aa = Nfa::from_words(al(), [&w("aa")]);
        let r = intersect_rect(&an_bn(), &aa, &all).unwrap();
        let expected: BTreeSet<_> = [(w("aa"), w("bb"))].into_iter().collect();
        assert_eq!(enumerate_pairs(&r, 6, 6), expected);
    }

    #[test]
    fn identity_examples() {
        let r = Nfa::from_words(al(), [&w("ab")]);
        let expected: BTreeSet<_> = [(w("ab"), w("ab"))].into_iter().collect();
        assert_eq!(enumerate_pairs(&identity_of(&r), 6, 6), expected);
        assert!(enumerate_pairs(&identity_of(&Nfa::empty(al())), 6, 6).is_empty());
    }

    #[test]
    fn from_pairs_examples() {
        let t = from_pairs(al(), &[(w("a"), w("bb"))]);
        assert!(accepts_pair(&t, &w("a"), &w("bb")));
        assert_eq!(enumerate_pairs(&t, 6, 6).len(), 1);
        assert!(enumerate_pairs(&from_pairs(al(), &[]), 6, 6).is_empty());
        let e = from_pairs(al(), &[(Word::empty(), Word::empty())]);
        let expected: BTreeSet<_> = [(Word::empty(), Word::empty())].into_iter().collect();
        assert_eq!(enumerate_pairs(&e, 6, 6), expected);
    }

    #[test]
    fn projection_examples() {
        let first = project(&an_bn(), Tape::First);
        let mut astar = Nfa::new(al(), 1, 0);
        astar.add_edge(0, l("a"), 0);
        astar.add_terminal(0);
        assert!(equivalent(&first, &astar).unwrap());
        let mut bstar = Nfa::new(al(), 1, 0);
        bstar.add_edge(0, l("b"), 0);
        bstar.add_terminal(0);
        assert!(equivalent(&project(&an_bn(), Tape::Second), &bstar).unwrap());
        let r = Nfa::from_words(al(), [&w("ab"), &w("b")]);
        let id = identity_of(&r);
        assert!(equivalent(&project(&id, Tape::First), &r).unwrap());
        assert!(equivalent(&project(&id, Tape::Second), &r).unwrap());
        assert_eq!(enumerate(&project(&id, Tape::First), 3), vec![w("b"), w("ab")]);
    }

    #[test]
    fn strip_examples() {
        let mut t = an_b_an();
        t.add_edge(1, (None, None), 1);
        let s = strip_epsilon_cycles(&t);
        assert!(s.edges().iter().all(|e| e.label != (None, None)));
        assert_eq!(enumerate_pairs(&s, 6, 6), enumerate_pairs(&t, 6, 6));

        let mut t = Transducer::new(al(), 3, 0);
        t.add_edge(0, (l("a"), None), 1);
        t.add_edge(1, (None, None), 2);
        t.add_edge(2, (None, None), 1);
        t.add_edge(2, (None, l("b")), 0);
        t.add_terminal(2);
        let s = strip_epsilon_cycles(&t);
        assert_eq!(s.num_states(), 2);
        assert_eq!(enumerate_pairs(&s, 6, 6), enumerate_pairs(&t, 6, 6));

        let plain = an_b_an();
        assert_eq!(strip_epsilon_cycles(&plain), plain);
    }

    #[test]
    fn synchronized_bound_examples() {
        assert_eq!(synchronized_bound(&an_bn()), Some(0));
        assert_eq!(synchronized_bound(&an_b_an()), Some(1));
        let mut t = Transducer::new(al(), 1, 0);
        t.add_edge(0, (l("a"), None), 0);
        t.add_terminal(0);
        assert_eq!(synchronized_bound(&t), None);
    }

    #[test]
    fn synchronized_shape() {
        assert!(has_synchronized_shape(&an_bn()));
        assert!(has_synchronized_shape(&an_b_an()));
        let mut t = Transducer::new(al(), 2, 0);
        t.add_edge(0, (l("a"), None), 1);
        t.add_edge(1, (l("a"), l("a")), 1);
        t.add_terminal(1);
        assert!(!has_synchronized_shape(&t));
    }

    use proptest::prelude::*;

    fn arb_transducer() -> impl Strategy<Value = Transducer> {
        (1usize..4).prop_flat_map(|n| {
            let side = proptest::option::of(0u16..4);
            let edge = (0..n, side.clone(), side, 0..n);
            (
                proptest::collection::vec(edge, 0..8),
                proptest::collection::btree_set(0..n, 0..=n),
            )
                .prop_map(move |(edges, finals)| {
                    let mut t = Transducer::new(al(), n, 0);
                    for (f, x, y, to) in edges {
                        t.add_edge(f, (x.map(Letter), y.map(Letter)), to);
                    }
                    t.set_terminals(finals);
                    t
                })
        })
    }

    proptest! {
        #[test]
        fn cleanup_preserves_the_relation(t in arb_transducer()) {
            let pairs = enumerate_pairs_total(&t, 6);
            prop_assert_eq!(&enumerate_pairs_total(&trim_t(&t), 6), &pairs);
            prop_assert_eq!(&enumerate_pairs_total(&strip_epsilon_cycles(&t), 6), &pairs);
            let swapped: BTreeSet<_> = pairs.iter().map(|(u, v)| (v.clone(), u.clone())).collect();
            prop_assert_eq!(enumerate_pairs_total(&t.swap_tapes(), 6), swapped);
        }

        #[test]
        fn synchronized_bound_bounds_pairs(t in arb_transducer()) {
            if let Some(k) = synchronized_bound(&t) {
                for (u, v) in enumerate_pairs_total(&t, 8) {
                    prop_assert!(u.len().abs_diff(v.len()) <= k);
                }
            }
        }
    }
}
