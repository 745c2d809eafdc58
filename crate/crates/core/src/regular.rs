//! Finite automata over `Σ ∪ {ε}` with a single initial state.

use std::collections::hash_map::Entry;
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::words::{Alphabet, Letter, Word};

/// An edge of an [`Nfa`]; a `None` label is ε.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub from: usize,
    pub label: Option<Letter>,
    pub to: usize,
}

/// A finite automaton: dense state ids `0..states`, one initial state, a set of terminals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Arc<Alphabet>,
    states: usize,
    edges: Vec<Edge>,
    initial: usize,
    terminals: BTreeSet<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombineOp {
    Union,
    Concat,
}

impl Nfa {
    /// An automaton with `states` states and no edges or terminals.
    pub fn new(alphabet: Arc<Alphabet>, states: usize, initial: usize) -> Self {
        assert!(initial < states.max(1), "initial state out of range");
        Nfa {
            alphabet,
            states: states.max(1),
            edges: Vec::new(),
            initial,
            terminals: BTreeSet::new(),
        }
    }

    /// The empty language: a lone initial state.
    pub fn empty(alphabet: Arc<Alphabet>) -> Self {
        Nfa::new(alphabet, 1, 0)
    }

    /// `Σ*`.
    pub fn universal(alphabet: Arc<Alphabet>) -> Self {
        let mut a = Nfa::new(alphabet.clone(), 1, 0);
        for x in alphabet.letters() {
            a.add_edge(0, Some(x), 0);
        }
        a.add_terminal(0);
        a
    }

    /// A finite language, one chain per word.
    pub fn from_words<'a>(alphabet: Arc<Alphabet>, words: impl IntoIterator<Item = &'a Word>) -> Self {
        let mut a = Nfa::new(alphabet, 1, 0);
        for w in words {
            let mut cur = 0;
            for &x in w.iter() {
                let next = a.add_state();
                a.add_edge(cur, Some(x), next);
                cur = next;
            }
            a.add_terminal(cur);
        }
        a
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.states
    }

    pub fn edges(&self) -> &[Edge] {
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

    pub fn add_edge(&mut self, from: usize, label: Option<Letter>, to: usize) {
        assert!(from < self.states && to < self.states, "edge endpoint out of range");
        self.edges.push(Edge { from, label, to });
    }

    pub fn add_terminal(&mut self, state: usize) {
        assert!(state < self.states, "terminal out of range");
        self.terminals.insert(state);
    }

    pub fn set_initial(&mut self, state: usize) {
        assert!(state < self.states, "initial out of range");
        self.initial = state;
    }

    pub fn set_terminals(&mut self, terminals: impl IntoIterator<Item = usize>) {
        self.terminals = terminals.into_iter().collect();
        assert!(self.terminals.iter().all(|&t| t < self.states));
    }

    /// Sorts and deduplicates the edge list.
    pub fn normalize(&mut self) {
        self.edges.sort();
        self.edges.dedup();
    }

    pub(crate) fn out_edges(&self) -> Vec<Vec<(Option<Letter>, usize)>> {
        let mut out = vec![Vec::new(); self.states];
        for e in &self.edges {
            out[e.from].push((e.label, e.to));
        }
        out
    }

    /// The same automaton with letters renamed by `f`.
    pub fn map_letters(&self, f: impl Fn(Letter) -> Letter) -> Nfa {
        let mut a = self.clone();
        for e in &mut a.edges {
            e.label = e.label.map(&f);
        }
        a
    }

    /// Appends a copy of `other` with shifted ids; returns the offset.
    pub(crate) fn embed(&mut self, other: &Nfa) -> usize {
        let off = self.states;
        self.states += other.states;
        self.edges.extend(other.edges.iter().map(|e| Edge {
            from: e.from + off,
            label: e.label,
            to: e.to + off,
        }));
        off
    }

    fn check_alphabet(&self, other: &Nfa) -> Result<()> {
        if self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    /// Minimum number of letters needed to reach a terminal from each state.
    pub(crate) fn distance_to_terminal(&self) -> Vec<usize> {
        let mut rev = vec![Vec::new(); self.states];
        for e in &self.edges {
            rev[e.to].push((e.label.is_some() as usize, e.from));
        }
        let mut dist = vec![usize::MAX; self.states];
        let mut dq = VecDeque::new();
        for &t in &self.terminals {
            dist[t] = 0;
            dq.push_back(t);
        }
        while let Some(v) = dq.pop_front() {
            for &(w, u) in &rev[v] {
                let d = dist[v] + w;
                if d < dist[u] {
                    dist[u] = d;
                    if w == 0 {
                        dq.push_front(u);
                    } else {
                        dq.push_back(u);
                    }
                }
            }
        }
        dist
    }
}

pub(crate) fn epsilon_closure(out: &[Vec<(Option<Letter>, usize)>], set: &mut Vec<usize>) {
    let mut seen: BTreeSet<usize> = set.iter().copied().collect();
    let mut stack: Vec<usize> = set.clone();
    while let Some(v) = stack.pop() {
        for &(label, to) in &out[v] {
            if label.is_none() && seen.insert(to) {
                stack.push(to);
            }
        }
    }
    *set = seen.into_iter().collect();
}

pub(crate) fn step(out: &[Vec<(Option<Letter>, usize)>], set: &[usize], x: Letter) -> Vec<usize> {
    let mut next: BTreeSet<usize> = BTreeSet::new();
    for &v in set {
        for &(label, to) in &out[v] {
            if label == Some(x) {
                next.insert(to);
            }
        }
    }
    let mut next: Vec<usize> = next.into_iter().collect();
    epsilon_closure(out, &mut next);
    next
}

/// True iff `w` labels a path from the initial state to a terminal.
pub fn accepts(a: &Nfa, w: &Word) -> bool {
    let out = a.out_edges();
    let mut cur = vec![a.initial];
    epsilon_closure(&out, &mut cur);
    for &x in w.iter() {
        cur = step(&out, &cur, x);
        if cur.is_empty() {
            return false;
        }
    }
    cur.iter().any(|s| a.terminals.contains(s))
}

/// States reachable from `initial` and co-reachable to a terminal.
pub(crate) fn useful_states(
    states: usize,
    initial: usize,
    terminals: &BTreeSet<usize>,
    arcs: impl Iterator<Item = (usize, usize)> + Clone,
) -> Vec<bool> {
    let mut fwd = vec![Vec::new(); states];
    let mut bwd = vec![Vec::new(); states];
    for (f, t) in arcs {
        fwd[f].push(t);
        bwd[t].push(f);
    }
    let reach = |adj: &Vec<Vec<usize>>, starts: Vec<usize>| {
        let mut seen = vec![false; states];
        let mut stack = starts;
        for &s in &stack {
            seen[s] = true;
        }
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    };
    let f = reach(&fwd, vec![initial]);
    let b = reach(&bwd, terminals.iter().copied().collect());
    f.iter().zip(&b).map(|(x, y)| *x && *y).collect()
}

/// Removes every state and edge that is not on a successful path. The initial
/// state always survives; surviving states keep their relative order.
pub fn trim(a: &Nfa) -> Nfa {
    let useful = useful_states(
        a.states,
        a.initial,
        &a.terminals,
        a.edges.iter().map(|e| (e.from, e.to)),
    );
    if !useful[a.initial] {
        return Nfa::new(a.alphabet.clone(), 1, 0);
    }
    let mut remap = vec![usize::MAX; a.states];
    let mut n = 0;
    for (s, &u) in useful.iter().enumerate() {
        if u {
            remap[s] = n;
            n += 1;
        }
    }
    let mut out = Nfa::new(a.alphabet.clone(), n, remap[a.initial]);
    for e in &a.edges {
        if useful[e.from] && useful[e.to] {
            out.edges.push(Edge {
                from: remap[e.from],
                label: e.label,
                to: remap[e.to],
            });
        }
    }
    out.terminals = a.terminals.iter().filter(|&&t| useful[t]).map(|&t| remap[t]).collect();
    out.normalize();
    out
}

/// Accepts the reversals of the words of `a`: edges are reversed, the old
/// initial state becomes the sole terminal, and a fresh initial state is
/// joined by ε-edges to each old terminal.
pub fn reverse(a: &Nfa) -> Nfa {
    let mut out = Nfa::new(a.alphabet.clone(), a.states + 1, a.states);
    for e in &a.edges {
        out.edges.push(Edge {
            from: e.to,
            label: e.label,
            to: e.from,
        });
    }
    for &t in &a.terminals {
        out.add_edge(a.states, None, t);
    }
    out.add_terminal(a.initial);
    out
}

/// Accepts `{ w⁻¹ : w ∈ L(a) }`.
pub fn inverse_language(a: &Nfa) -> Nfa {
    let alphabet = a.alphabet.clone();
    reverse(a).map_letters(|x| alphabet.inverse(x))
}

/// One pair per state `p`: `X_p` accepts with `p` as its sole terminal, `Y_p`
/// starts at `p`. A split `w = u·v` lies in `L(a)` iff some pair has `u ∈ X_p` and `v ∈ Y_p`.
pub fn split_decomposition(a: &Nfa) -> Vec<(Nfa, Nfa)> {
    (0..a.states)
        .map(|p| {
            let mut x = a.clone();
            x.set_terminals([p]);
            let mut y = a.clone();
            y.set_initial(p);
            (trim(&x), trim(&y))
        })
        .collect()
}

/// Union through a fresh initial state with ε-edges, or concatenation through
/// ε-edges from the terminals of `a` to the initial state of `b`.
pub fn combine(op: CombineOp, a: &Nfa, b: &Nfa) -> Result<Nfa> {
    a.check_alphabet(b)?;
    match op {
        CombineOp::Union => {
            let mut out = Nfa::new(a.alphabet.clone(), 1, 0);
            let oa = out.embed(a);
            let ob = out.embed(b);
            out.add_edge(0, None, a.initial + oa);
            out.add_edge(0, None, b.initial + ob);
            out.terminals = a
                .terminals
                .iter()
                .map(|t| t + oa)
                .chain(b.terminals.iter().map(|t| t + ob))
                .collect();
            Ok(out)
        }
        CombineOp::Concat => {
            let mut out = a.clone();
            let ob = out.embed(b);
            for &t in &a.terminals {
                out.add_edge(t, None, b.initial + ob);
            }
            out.terminals = b.terminals.iter().map(|t| t + ob).collect();
            Ok(out)
        }
    }
}

/// All accepted words of length at most `maxlen`, in shortlex order.
pub fn enumerate(a: &Nfa, maxlen: usize) -> Vec<Word> {
    let a = trim(a);
    if a.terminals.is_empty() {
        return Vec::new();
    }
    let out = a.out_edges();
    let dist = a.distance_to_terminal();
    let mut start = vec![a.initial];
    epsilon_closure(&out, &mut start);
    let mut result = Vec::new();
    let mut level: Vec<(Word, Vec<usize>)> = vec![(Word::empty(), start)];
    for len in 0..=maxlen {
        let mut next = Vec::new();
        for (w, set) in &level {
            if set.iter().any(|s| a.terminals.contains(s)) {
                result.push(w.clone());
            }
            if len == maxlen {
                continue;
            }
            let remaining = maxlen - len - 1;
            for x in a.alphabet.letters() {
                let s = step(&out, set, x);
                if s.iter().any(|&q| dist[q] <= remaining) {
                    let mut v = w.clone();
                    v.0.push(x);
                    next.push((v, s));
                }
            }
        }
        level = next;
    }
    result
}

/// A partial deterministic automaton; missing transitions reject.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Arc<Alphabet>,
    trans: Vec<Vec<Option<usize>>>,
    initial: usize,
    finals: Vec<bool>,
}

impl Dfa {
    pub fn new(alphabet: Arc<Alphabet>, trans: Vec<Vec<Option<usize>>>, initial: usize, finals: Vec<bool>) -> Self {
        assert_eq!(trans.len(), finals.len());
        Dfa {
            alphabet,
            trans,
            initial,
            finals,
        }
    }

    pub fn num_states(&self) -> usize {
        self.trans.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn is_final(&self, s: usize) -> bool {
        self.finals[s]
    }

    pub fn next(&self, s: usize, x: Letter) -> Option<usize> {
        self.trans[s][x.index()]
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn accepts(&self, w: &Word) -> bool {
        let mut s = self.initial;
        for &x in w.iter() {
            match self.next(s, x) {
                Some(t) => s = t,
                None => return false,
            }
        }
        self.finals[s]
    }

    pub fn with_finals(&self, finals: Vec<bool>) -> Dfa {
        Dfa { finals, ..self.clone() }
    }

    pub fn to_nfa(&self) -> Nfa {
        let mut a = Nfa::new(self.alphabet.clone(), self.trans.len(), self.initial);
        for (s, row) in self.trans.iter().enumerate() {
            for (x, t) in row.iter().enumerate() {
                if let Some(t) = t {
                    a.add_edge(s, Some(Letter(x as u16)), *t);
                }
            }
        }
        a.set_terminals((0..self.trans.len()).filter(|&s| self.finals[s]));
        a
    }
}

/// Subset construction; only nonempty subsets become states.
pub fn determinize(a: &Nfa) -> Dfa {
    let out = a.out_edges();
    let mut start = vec![a.initial];
    epsilon_closure(&out, &mut start);
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut subsets = vec![start.clone()];
    index.insert(start, 0);
    let mut trans = Vec::new();
    let mut i = 0;
    while i < subsets.len() {
        let mut row = Vec::with_capacity(a.alphabet.len());
        for x in a.alphabet.letters() {
            let s = step(&out, &subsets[i], x);
            if s.is_empty() {
                row.push(None);
                continue;
            }
            let id = match index.get(&s) {
                Some(&id) => id,
                None => {
                    let id = subsets.len();
                    index.insert(s.clone(), id);
                    subsets.push(s);
                    id
                }
            };
            row.push(Some(id));
        }
        trans.push(row);
        i += 1;
    }
    let finals = subsets
        .iter()
        .map(|s| s.iter().any(|q| a.terminals.contains(q)))
        .collect();
    Dfa::new(a.alphabet.clone(), trans, 0, finals)
}

/// Minimal trim partial DFA for `L(a)`, states numbered in BFS order from the
/// initial state.
pub fn minimize(a: &Nfa) -> Dfa {
    minimize_dfa(&determinize(&trim(a)))
}

pub fn minimize_dfa(d: &Dfa) -> Dfa {
    let n = d.trans.len();
    // co-reachable states only
    let mut rev = vec![Vec::new(); n];
    for (s, row) in d.trans.iter().enumerate() {
        for t in row.iter().flatten() {
            rev[*t].push(s);
        }
    }
    let mut alive = d.finals.clone();
    let mut stack: Vec<usize> = (0..n).filter(|&s| alive[s]).collect();
    while let Some(v) = stack.pop() {
        for &u in &rev[v] {
            if !alive[u] {
                alive[u] = true;
                stack.push(u);
            }
        }
    }
    if !alive[d.initial] {
        return Dfa::new(d.alphabet.clone(), vec![vec![None; d.alphabet.len()]], 0, vec![false]);
    }
    let target = |s: usize, x: usize| d.trans[s][x].filter(|&t| alive[t]);
    let mut class: Vec<usize> = (0..n).map(|s| d.finals[s] as usize).collect();
    let mut count = 0;
    loop {
        let mut sig_index: HashMap<(usize, Vec<Option<usize>>), usize> = HashMap::new();
        let mut next = vec![0; n];
        for s in (0..n).filter(|&s| alive[s]) {
            let sig = (
                class[s],
                (0..d.alphabet.len()).map(|x| target(s, x).map(|t| class[t])).collect(),
            );
            let len = sig_index.len();
            next[s] = *sig_index.entry(sig).or_insert(len);
        }
        let new_count = sig_index.len();
        class = next;
        if new_count == count {
            break;
        }
        count = new_count;
    }
    // BFS renumbering from the initial class
    let mut order: HashMap<usize, usize> = HashMap::new();
    let mut reps = Vec::new();
    let mut queue = VecDeque::new();
    order.insert(class[d.initial], 0);
    reps.push(d.initial);
    queue.push_back(d.initial);
    while let Some(s) = queue.pop_front() {
        for x in 0..d.alphabet.len() {
            if let Some(t) = target(s, x) {
                if let Entry::Vacant(e) = order.entry(class[t]) {
                    e.insert(reps.len());
                    reps.push(t);
                    queue.push_back(t);
                }
            }
        }
    }
    let trans = reps
        .iter()
        .map(|&s| {
            (0..d.alphabet.len())
                .map(|x| target(s, x).map(|t| order[&class[t]]))
                .collect()
        })
        .collect();
    let finals = reps.iter().map(|&s| d.finals[s]).collect();
    Dfa::new(d.alphabet.clone(), trans, 0, finals)
}

/// The shortlex-least word in the symmetric difference of the two languages,
/// or `None` when they are equal.
pub fn distinguishing_word(a: &Nfa, b: &Nfa) -> Result<Option<Word>> {
    a.check_alphabet(b)?;
    let (oa, ob) = (a.out_edges(), b.out_edges());
    let mut sa = vec![a.initial];
    epsilon_closure(&oa, &mut sa);
    let mut sb = vec![b.initial];
    epsilon_closure(&ob, &mut sb);
    let mut seen: HashMap<(Vec<usize>, Vec<usize>), ()> = HashMap::new();
    let mut queue = VecDeque::new();
    seen.insert((sa.clone(), sb.clone()), ());
    queue.push_back((sa, sb, Word::empty()));
    while let Some((sa, sb, w)) = queue.pop_front() {
        let fa = sa.iter().any(|s| a.terminals.contains(s));
        let fb = sb.iter().any(|s| b.terminals.contains(s));
        if fa != fb {
            return Ok(Some(w));
        }
        for x in a.alphabet.letters() {
            let na = step(&oa, &sa, x);
            let nb = step(&ob, &sb, x);
            if na.is_empty() && nb.is_empty() {
                continue;
            }
            let key = (na, nb);
            if !seen.contains_key(&key) {
                seen.insert(key.clone(), ());
                let mut v = w.clone();
                v.0.push(x);
                queue.push_back((key.0, key.1, v));
            }
        }
    }
    Ok(None)
}

/// Exact language equality.
pub fn equivalent(a: &Nfa, b: &Nfa) -> Result<bool> {
    Ok(distinguishing_word(a, b)?.is_none())
}

/// Freely reduced words, one state per last-read letter plus a start state.
pub fn freely_reduced_lang(alphabet: Arc<Alphabet>, include_empty: bool) -> Nfa {
    let n = alphabet.len();
    let mut a = Nfa::new(alphabet.clone(), n + 1, 0);
    for x in alphabet.letters() {
        a.add_edge(0, Some(x), 1 + x.index());
        for y in alphabet.letters() {
            if alphabet.inverse(x) != y {
                a.add_edge(1 + x.index(), Some(y), 1 + y.index());
            }
        }
        a.add_terminal(1 + x.index());
    }
    if include_empty {
        a.add_terminal(0);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn al() -> Arc<Alphabet> {
        Arc::new(Alphabet::with_inverses(&["a", "b"]).unwrap())
    }

    fn w(s: &str) -> Word {
        al().parse_word(s).unwrap()
    }

    fn single(s: &str) -> Nfa {
        Nfa::from_words(al(), [&w(s)])
    }

    fn star(s: &str) -> Nfa {
        let mut a = Nfa::new(al(), 1, 0);
        a.add_edge(0, Some(al().letter(s).unwrap()), 0);
        a.add_terminal(0);
        a
    }

    #[test]
    fn accepts_examples() {
        let a = single("a");
        assert!(accepts(&a, &w("a")));
        assert!(!accepts(&a, &w("aa")));
        let mut e = Nfa::new(al(), 1, 0);
        e.add_terminal(0);
        assert!(accepts(&e, &Word::empty()));
    }

    #[test]
    fn trim_removes_dead_and_unreachable_states() {
        let mut a = Nfa::new(al(), 5, 0);
        a.add_edge(0, Some(Letter(0)), 1);
        a.add_edge(0, Some(Letter(2)), 2); // dead end
        a.add_edge(3, Some(Letter(0)), 1); // unreachable
        a.add_edge(1, None, 4);
        a.add_terminal(4);
        let t = trim(&a);
        assert_eq!(t.num_states(), 3);
        assert_eq!(enumerate(&t, 8), enumerate(&a, 8));
        assert_eq!(trim(&t), t);
    }

    #[test]
    fn empty_language_trims_to_lone_initial() {
        let mut a = Nfa::new(al(), 3, 1);
        a.add_edge(1, Some(Letter(0)), 2);
        let t = trim(&a);
        assert_eq!(t.num_states(), 1);
        assert!(t.terminals().is_empty());
        assert!(t.edges().is_empty());
    }

    #[test]
    fn reverse_examples() {
        let r = reverse(&single("ab"));
        assert_eq!(enumerate(&r, 4), vec![w("ba")]);
        let mut e = Nfa::new(al(), 1, 0);
        e.add_terminal(0);
        assert_eq!(enumerate(&reverse(&e), 4), vec![Word::empty()]);
    }

    #[test]
    fn split_of_chain() {
        let a = trim(&single("ab"));
        let pairs = split_decomposition(&a);
        assert_eq!(pairs.len(), 3);
        let hits: Vec<usize> = (0..3)
            .filter(|&i| accepts(&pairs[i].0, &w("a")) && accepts(&pairs[i].1, &w("b")))
            .collect();
        assert_eq!(hits, vec![1]);
        let hits: Vec<usize> = (0..3)
            .filter(|&i| accepts(&pairs[i].0, &Word::empty()) && accepts(&pairs[i].1, &w("ab")))
            .collect();
        assert_eq!(hits, vec![a.initial()]);
    }

    #[test]
    fn combine_examples() {
        let u = combine(CombineOp::Union, &single("a"), &single("b")).unwrap();
        assert_eq!(enumerate(&u, 3), vec![w("a"), w("b")]);
        let c = combine(CombineOp::Concat, &single("a"), &single("b")).unwrap();
        assert_eq!(enumerate(&c, 3), vec![w("ab")]);
        let l = star("a");
        let with_empty = combine(CombineOp::Union, &l, &Nfa::empty(al())).unwrap();
        assert!(equivalent(&with_empty, &l).unwrap());
        let other = Arc::new(Alphabet::with_inverses(&["x"]).unwrap());
        assert_eq!(
            combine(CombineOp::Union, &l, &Nfa::empty(other)),
            Err(Error::AlphabetMismatch)
        );
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate(&star("a"), 2), vec![Word::empty(), w("a"), w("aa")]);
        assert!(enumerate(&Nfa::empty(al()), 5).is_empty());
        let mut aa = Nfa::new(al(), 1, 0);
        aa.add_edge(0, Some(Letter(0)), 0);
        aa.add_edge(0, Some(Letter(1)), 0);
        aa.add_terminal(0);
        assert_eq!(enumerate(&aa, 1), vec![Word::empty(), w("a"), w("A")]);
    }

    #[test]
    fn equivalence_examples() {
        // a* as a two-state loop with ε-edges
        let mut b = Nfa::new(al(), 2, 0);
        b.add_edge(0, Some(Letter(0)), 1);
        b.add_edge(1, None, 0);
        b.add_terminal(0);
        b.add_terminal(1);
        assert!(equivalent(&star("a"), &b).unwrap());
        let plus = combine(CombineOp::Concat, &single("a"), &star("a")).unwrap();
        assert_eq!(distinguishing_word(&star("a"), &plus).unwrap(), Some(Word::empty()));
        let a = single("ab");
        assert!(equivalent(&a, &trim(&a)).unwrap());
    }

    #[test]
    fn freely_reduced_examples() {
        let f = freely_reduced_lang(al(), false);
        assert!(!accepts(&f, &w("aA")));
        assert!(accepts(&f, &w("ba")));
        assert!(!accepts(&f, &Word::empty()));
        assert!(accepts(&freely_reduced_lang(al(), true), &Word::empty()));
    }

    #[test]
    fn minimize_is_canonical() {
        let mut b = Nfa::new(al(), 3, 0);
        b.add_edge(0, Some(Letter(0)), 1);
        b.add_edge(1, Some(Letter(0)), 2);
        b.add_edge(2, Some(Letter(0)), 1);
        b.set_terminals([0, 1, 2]);
        let m = minimize(&b);
        assert_eq!(m.num_states(), 1);
        assert_eq!(m, minimize(&star("a")));
    }

    fn arb_nfa() -> impl Strategy<Value = Nfa> {
        (1usize..5).prop_flat_map(|n| {
            let edge = (0..n, proptest::option::of(0u16..4), 0..n);
            (
                proptest::collection::vec(edge, 0..10),
                proptest::collection::btree_set(0..n, 0..=n),
            )
                .prop_map(move |(edges, finals)| {
                    let mut a = Nfa::new(al(), n, 0);
                    for (f, l, t) in edges {
                        a.add_edge(f, l.map(Letter), t);
                    }
                    a.set_terminals(finals);
                    a
                })
        })
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        proptest::collection::vec(0u16..4, 0..7).prop_map(|v| Word::from_indices(&v))
    }

    proptest! {
        #[test]
        fn determinize_and_minimize_preserve_acceptance(a in arb_nfa(), ws in proptest::collection::vec(arb_word(), 20)) {
            let (d, m) = (determinize(&a), minimize(&a));
            for w in &ws {
                prop_assert_eq!(d.accepts(w), accepts(&a, w));
                prop_assert_eq!(m.accepts(w), accepts(&a, w));
            }
            prop_assert!(m.num_states() <= d.num_states().max(1));
        }

        #[test]
        fn witnesses_separate(a in arb_nfa(), b in arb_nfa()) {
            match distinguishing_word(&a, &b).unwrap() {
                Some(w) => prop_assert_ne!(accepts(&a, &w), accepts(&b, &w)),
                None => prop_assert_eq!(enumerate(&a, 5), enumerate(&b, 5)),
            }
            prop_assert!(equivalent(&reverse(&reverse(&a)), &a).unwrap());
            prop_assert!(equivalent(&trim(&a), &a).unwrap());
        }
    }
}
