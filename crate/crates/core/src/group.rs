//! Word-problem oracles for quotients of the free group on the alphabet, the
//! word metric, Cayley balls and fellow-traveler distances.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::transduce::{PairLabel, Transducer};
use crate::words::{free_reduce, Alphabet, Letter, Word};

/// Default cap on the number of elements in a ball.
pub const DEFAULT_ELEMENT_CAP: usize = 200_000;

/// Canonical form of a group element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    /// Freely reduced word.
    Free(Vec<Letter>),
    /// Integer vector.
    Abelian(Vec<i64>),
    /// Element id of a multiplication table.
    Finite(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleKind {
    Free,
    Abelian {
        rank: usize,
        /// one weight vector per letter, negated on inverse letters
        weights: Vec<Vec<i64>>,
    },
    Finite {
        table: Vec<Vec<usize>>,
        identity: usize,
        inverse: Vec<usize>,
        /// one element per letter
        letter_element: Vec<usize>,
    },
}

/// A word-problem decision procedure for `G = F/N` with the alphabet as
/// generators and inverses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupOracle {
    alphabet: Arc<Alphabet>,
    kind: OracleKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FtMode {
    Sync,
    Async,
}

impl FtMode {
    pub fn name(self) -> &'static str {
        match self {
            FtMode::Sync => "sync",
            FtMode::Async => "async",
        }
    }
}

impl GroupOracle {
    /// The free group on the alphabet (`N = 1`).
    pub fn free(alphabet: Arc<Alphabet>) -> Self {
        GroupOracle {
            alphabet,
            kind: OracleKind::Free,
        }
    }

    /// A free abelian group of the given rank. Letters not listed get weight
    /// zero; inverse letters get the negated weight.
    pub fn abelian(alphabet: Arc<Alphabet>, rank: usize, weights: &[(Letter, Vec<i64>)]) -> Result<Self> {
        let mut table: Vec<Option<Vec<i64>>> = vec![None; alphabet.len()];
        for (x, wv) in weights {
            if wv.len() != rank {
                return Err(Error::InvalidOracle(format!(
                    "weight of `{}` has {} entries, rank is {rank}",
                    alphabet.symbol(*x),
                    wv.len()
                )));
            }
            let neg: Vec<i64> = wv.iter().map(|v| -v).collect();
            for (letter, value) in [(*x, wv.clone()), (alphabet.inverse(*x), neg)] {
                match &table[letter.index()] {
                    Some(old) if *old != value => {
                        return Err(Error::InvalidOracle(format!(
                            "inconsistent weight for `{}`",
                            alphabet.symbol(letter)
                        )))
                    }
                    _ => table[letter.index()] = Some(value),
                }
            }
        }
        let weights = table.into_iter().map(|w| w.unwrap_or_else(|| vec![0; rank])).collect();
        Ok(GroupOracle {
            alphabet,
            kind: OracleKind::Abelian { rank, weights },
        })
    }

    /// A finite group given by its multiplication table and an element for
    /// some letters; the remaining letters are determined by inversion.
    pub fn finite(alphabet: Arc<Alphabet>, table: Vec<Vec<usize>>, letters: &[(Letter, usize)]) -> Result<Self> {
        let n = table.len();
        if n == 0 || table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return Err(Error::InvalidOracle(
                "table must be a square array of element ids".into(),
            ));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::InvalidOracle("table has no identity".into()))?;
        let mut inverse = vec![usize::MAX; n];
        for x in 0..n {
            inverse[x] = (0..n)
                .find(|&y| table[x][y] == identity && table[y][x] == identity)
                .ok_or_else(|| Error::InvalidOracle(format!("element {x} has no inverse")))?;
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if table[table[x][y]][z] != table[x][table[y][z]] {
                        return Err(Error::InvalidOracle("table is not associative".into()));
                    }
                }
            }
        }
        let mut letter_element: Vec<Option<usize>> = vec![None; alphabet.len()];
        for &(x, e) in letters {
            if e >= n {
                return Err(Error::InvalidOracle(format!("element {e} out of range")));
            }
            for (letter, value) in [(x, e), (alphabet.inverse(x), inverse[e])] {
                match letter_element[letter.index()] {
                    Some(old) if old != value => {
                        return Err(Error::InvalidOracle(format!(
                            "letter `{}` maps to {old} but its inverse requires {value}",
                            alphabet.symbol(letter)
                        )))
                    }
                    _ => letter_element[letter.index()] = Some(value),
                }
            }
        }
        let letter_element = letter_element
            .into_iter()
            .enumerate()
            .map(|(i, e)| {
                e.ok_or_else(|| Error::InvalidOracle(format!("letter `{}` has no element", alphabet.symbols()[i])))
            })
            .collect::<Result<_>>()?;
        Ok(GroupOracle {
            alphabet,
            kind: OracleKind::Finite {
                table,
                identity,
                inverse,
                letter_element,
            },
        })
    }

    /// `ℤ/n` with `generator` mapped to 1.
    pub fn cyclic(alphabet: Arc<Alphabet>, n: usize, generator: Letter) -> Result<Self> {
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        let others: Vec<(Letter, usize)> = alphabet
            .letters()
            .filter(|&x| x != generator && x != alphabet.inverse(generator))
            .filter(|&x| x < alphabet.inverse(x))
            .map(|x| (x, 0))
            .collect();
        let mut letters = vec![(generator, 1 % n)];
        letters.extend(others);
        GroupOracle::finite(alphabet, table, &letters)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn kind(&self) -> &OracleKind {
        &self.kind
    }

    pub fn identity(&self) -> Element {
        match &self.kind {
            OracleKind::Free => Element::Free(Vec::new()),
            OracleKind::Abelian { rank, .. } => Element::Abelian(vec![0; *rank]),
            OracleKind::Finite { identity, .. } => Element::Finite(*identity),
        }
    }

    /// `g · x̄`
    pub fn mul_letter(&self, g: &Element, x: Letter) -> Element {
        match (&self.kind, g) {
            (OracleKind::Free, Element::Free(w)) => {
                let mut w = w.clone();
                if w.last() == Some(&self.alphabet.inverse(x)) {
                    w.pop();
                } else {
                    w.push(x);
                }
                Element::Free(w)
            }
            (OracleKind::Abelian { weights, .. }, Element::Abelian(v)) => {
                Element::Abelian(v.iter().zip(&weights[x.index()]).map(|(a, b)| a + b).collect())
            }
            (
                OracleKind::Finite {
                    table, letter_element, ..
                },
                Element::Finite(e),
            ) => Element::Finite(table[*e][letter_element[x.index()]]),
            _ => panic!("element does not belong to this oracle"),
        }
    }

    /// `x̄ · g`
    pub fn left_mul_letter(&self, x: Letter, g: &Element) -> Element {
        match (&self.kind, g) {
            (OracleKind::Free, Element::Free(w)) => {
                let mut out = Vec::with_capacity(w.len() + 1);
                if w.first() == Some(&self.alphabet.inverse(x)) {
                    out.extend_from_slice(&w[1..]);
                } else {
                    out.push(x);
                    out.extend_from_slice(w);
                }
                Element::Free(out)
            }
            (
                OracleKind::Finite {
                    table, letter_element, ..
                },
                Element::Finite(e),
            ) => Element::Finite(table[letter_element[x.index()]][*e]),
            _ => self.mul_letter(g, x),
        }
    }

    pub fn inverse(&self, g: &Element) -> Element {
        match (&self.kind, g) {
            (OracleKind::Free, Element::Free(w)) => {
                Element::Free(w.iter().rev().map(|&x| self.alphabet.inverse(x)).collect())
            }
            (_, Element::Abelian(v)) => Element::Abelian(v.iter().map(|a| -a).collect()),
            (OracleKind::Finite { inverse, .. }, Element::Finite(e)) => Element::Finite(inverse[*e]),
            _ => panic!("element does not belong to this oracle"),
        }
    }

    pub fn mul(&self, g: &Element, h: &Element) -> Element {
        match (&self.kind, g, h) {
            (OracleKind::Free, Element::Free(a), Element::Free(b)) => {
                let w = Word(a.iter().chain(b.iter()).copied().collect());
                Element::Free(free_reduce(&self.alphabet, &w).0)
            }
            (_, Element::Abelian(a), Element::Abelian(b)) => {
                Element::Abelian(a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
            (OracleKind::Finite { table, .. }, Element::Finite(a), Element::Finite(b)) => {
                Element::Finite(table[*a][*b])
            }
            _ => panic!("element does not belong to this oracle"),
        }
    }

    /// The image `w̄` of a word.
    pub fn class_of(&self, w: &Word) -> Element {
        w.iter().fold(self.identity(), |g, &x| self.mul_letter(&g, x))
    }

    /// Classes of all prefixes of `w`, from `ε` to `w`.
    pub fn prefix_classes(&self, w: &Word) -> Vec<Element> {
        let mut out = Vec::with_capacity(w.len() + 1);
        let mut g = self.identity();
        out.push(g.clone());
        for &x in w.iter() {
            g = self.mul_letter(&g, x);
            out.push(g.clone());
        }
        out
    }

    pub fn is_identity(&self, w: &Word) -> bool {
        self.class_of(w) == self.identity()
    }

    pub fn describe(&self, g: &Element) -> String {
        match g {
            Element::Free(w) => self.alphabet.format_word(&Word(w.clone())),
            Element::Abelian(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                format!("({})", parts.join(","))
            }
            Element::Finite(e) => format!("#{e}"),
        }
    }

    /// Word length of `g`, if at most `cap`.
    pub fn norm(&self, g: &Element, cap: usize) -> Option<usize> {
        if let Element::Free(w) = g {
            return (w.len() <= cap).then_some(w.len());
        }
        if *g == self.identity() {
            return Some(0);
        }
        let mut seen: HashMap<Element, usize> = HashMap::new();
        let mut queue = VecDeque::new();
        seen.insert(self.identity(), 0);
        queue.push_back(self.identity());
        while let Some(h) = queue.pop_front() {
            let d = seen[&h];
            if d >= cap || seen.len() > DEFAULT_ELEMENT_CAP {
                return None;
            }
            for x in self.alphabet.letters() {
                let next = self.mul_letter(&h, x);
                if next == *g {
                    return Some(d + 1);
                }
                if !seen.contains_key(&next) {
                    seen.insert(next.clone(), d + 1);
                    queue.push_back(next);
                }
            }
        }
        None
    }

    /// `d(ū, v̄)` if it is at most `cap`.
    pub fn distance(&self, u: &Word, v: &Word, cap: usize) -> Option<usize> {
        let g = self.mul(&self.inverse(&self.class_of(u)), &self.class_of(v));
        self.norm(&g, cap)
    }

    pub fn ball(&self, radius: usize) -> Result<CayleyBall> {
        self.ball_with_cap(radius, DEFAULT_ELEMENT_CAP)
    }

    /// Breadth-first ball around `1`. Letters are tried in alphabet order, so
    /// each element's stored word is its shortlex-least geodesic.
    pub fn ball_with_cap(&self, radius: usize, cap: usize) -> Result<CayleyBall> {
        let mut elements = vec![self.identity()];
        let mut words = vec![Word::empty()];
        let mut dist = vec![0usize];
        let mut index: HashMap<Element, usize> = HashMap::new();
        index.insert(self.identity(), 0);
        let n = self.alphabet.len();
        let mut right: Vec<Vec<Option<usize>>> = Vec::new();
        let mut i = 0;
        while i < elements.len() {
            let mut row = vec![None; n];
            for x in self.alphabet.letters() {
                let h = self.mul_letter(&elements[i], x);
                if let Some(&j) = index.get(&h) {
                    row[x.index()] = Some(j);
                } else if dist[i] < radius {
                    if elements.len() >= cap {
                        return Err(Error::BallCapExceeded { cap, radius });
                    }
                    let j = elements.len();
                    index.insert(h.clone(), j);
                    elements.push(h);
                    let mut w = words[i].clone();
                    w.0.push(x);
                    words.push(w);
                    dist.push(dist[i] + 1);
                    row[x.index()] = Some(j);
                }
            }
            right.push(row);
            i += 1;
        }
        // fill edges into elements discovered after their neighbours were scanned
        for i in 0..elements.len() {
            for x in self.alphabet.letters() {
                if right[i][x.index()].is_none() {
                    let h = self.mul_letter(&elements[i], x);
                    right[i][x.index()] = index.get(&h).copied();
                }
            }
        }
        Ok(CayleyBall {
            radius,
            elements,
            words,
            dist,
            index,
            right,
        })
    }

    /// The ball of radius `radius` in the Cayley automaton with initial state
    /// `1` and the class of `target` as sole terminal. There is an edge
    /// `g → h` labelled `(a, b)` iff `g·b̄ = ā·h`, so a path labelled `(u, v)`
    /// from `1` ends at `ū⁻¹·v̄`.
    pub fn cayley_transducer(&self, target: &Word, radius: usize) -> Result<Transducer> {
        let ball = self.ball(radius)?;
        let goal = self.class_of(target);
        let terminal = ball
            .index_of(&goal)
            .ok_or_else(|| Error::TargetOutsideBall(self.describe(&goal)))?;
        let moves = ball.move_table(self);
        let mut t = Transducer::new(self.alphabet.clone(), ball.len(), 0);
        for (g, row) in moves.iter().enumerate() {
            for &((a, b), h) in row {
                t.add_edge(g, (a, b), h);
            }
        }
        t.add_terminal(terminal);
        Ok(t)
    }

    /// Fellow-traveler distance between two words; see [`Metric::ft_distance`].
    pub fn ft_distance(&self, mode: FtMode, u: &Word, v: &Word, cap: usize) -> Option<usize> {
        Metric::new(self, cap).ft_distance(mode, u, v)
    }
}

/// The elements within distance `radius` of `1`.
#[derive(Debug, Clone)]
pub struct CayleyBall {
    pub radius: usize,
    pub elements: Vec<Element>,
    /// shortlex-least geodesic of each element
    pub words: Vec<Word>,
    pub dist: Vec<usize>,
    index: HashMap<Element, usize>,
    /// `right[g][x]` is the index of `g·x̄` when it lies in the ball
    pub right: Vec<Vec<Option<usize>>>,
}

impl CayleyBall {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, g: &Element) -> Option<usize> {
        self.index.get(g).copied()
    }

    /// `left[g][x]` is the index of `x̄·g` when it lies in the ball.
    pub fn left_table(&self, oracle: &GroupOracle) -> Vec<Vec<Option<usize>>> {
        self.elements
            .iter()
            .map(|g| {
                oracle
                    .alphabet()
                    .letters()
                    .map(|x| self.index_of(&oracle.left_mul_letter(x, g)))
                    .collect()
            })
            .collect()
    }
}

impl CayleyBall {
    /// For each `g`, every nonempty pair label `(a, b)` over `Σ ∪ {ε}` with
    /// `ā⁻¹·g·b̄` inside the ball, with the index of that element.
    pub fn move_table(&self, oracle: &GroupOracle) -> Vec<Vec<(PairLabel, usize)>> {
        let al = oracle.alphabet();
        let options: Vec<Option<Letter>> = std::iter::once(None).chain(al.letters().map(Some)).collect();
        self.elements
            .iter()
            .map(|g| {
                let mut row = Vec::new();
                for &a in &options {
                    let mid = match a {
                        None => g.clone(),
                        Some(a) => oracle.left_mul_letter(al.inverse(a), g),
                    };
                    for &b in &options {
                        if a.is_none() && b.is_none() {
                            continue;
                        }
                        let h = match b {
                            None => mid.clone(),
                            Some(b) => oracle.mul_letter(&mid, b),
                        };
                        if let Some(j) = self.index_of(&h) {
                            row.push(((a, b), j));
                        }
                    }
                }
                row
            })
            .collect()
    }
}

/// Word metric with distances up to a fixed cap, backed by a ball.
pub struct Metric<'a> {
    oracle: &'a GroupOracle,
    cap: usize,
    ball: Option<CayleyBall>,
}

impl<'a> Metric<'a> {
    pub fn new(oracle: &'a GroupOracle, cap: usize) -> Self {
        let ball = match oracle.kind() {
            OracleKind::Free => None,
            _ => oracle.ball(cap).ok(),
        };
        Metric { oracle, cap, ball }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn oracle(&self) -> &GroupOracle {
        self.oracle
    }

    pub fn norm(&self, g: &Element) -> Option<usize> {
        match (&self.ball, g) {
            (_, Element::Free(w)) => (w.len() <= self.cap).then_some(w.len()),
            (Some(ball), _) => ball.index_of(g).map(|i| ball.dist[i]),
            (None, _) => self.oracle.norm(g, self.cap),
        }
    }

    /// `d(g, h)` if at most the cap.
    pub fn dist(&self, g: &Element, h: &Element) -> Option<usize> {
        self.norm(&self.oracle.mul(&self.oracle.inverse(g), h))
    }

    /// Synchronous: the largest `d(u(i), v(i))`, a word standing still at its
    /// end once exhausted. Asynchronous: the least bottleneck over monotone
    /// lattice paths from `(0,0)` to `(|u|,|v|)` moving by one step in either
    /// or both coordinates. `None` when the value exceeds the cap.
    pub fn ft_distance(&self, mode: FtMode, u: &Word, v: &Word) -> Option<usize> {
        let pu = self.oracle.prefix_classes(u);
        let pv = self.oracle.prefix_classes(v);
        self.ft_distance_classes(mode, &pu, &pv)
    }

    pub fn ft_distance_classes(&self, mode: FtMode, pu: &[Element], pv: &[Element]) -> Option<usize> {
        let over = self.cap + 1;
        let d = |i: usize, j: usize| self.dist(&pu[i], &pv[j]).unwrap_or(over);
        let (n, m) = (pu.len() - 1, pv.len() - 1);
        let value = match mode {
            FtMode::Sync => (0..=n.max(m)).map(|i| d(i.min(n), i.min(m))).max().unwrap_or(0),
            FtMode::Async => {
                let mut best = vec![vec![usize::MAX; m + 1]; n + 1];
                for i in 0..=n {
                    for j in 0..=m {
                        let here = d(i, j);
                        let prev = if i == 0 && j == 0 {
                            0
                        } else {
                            let mut p = usize::MAX;
                            if i > 0 {
                                p = p.min(best[i - 1][j]);
                            }
                            if j > 0 {
                                p = p.min(best[i][j - 1]);
                            }
                            if i > 0 && j > 0 {
                                p = p.min(best[i - 1][j - 1]);
                            }
                            p
                        };
                        best[i][j] = here.max(prev);
                    }
                }
                best[n][m]
            }
        };
        (value <= self.cap).then_some(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Arc<Alphabet> {
        Arc::new(Alphabet::with_inverses(&["a", "b"]).unwrap())
    }

    fn z2() -> GroupOracle {
        let al = ab();
        let a = al.letter("a").unwrap();
        let b = al.letter("b").unwrap();
        GroupOracle::abelian(al, 2, &[(a, vec![1, 0]), (b, vec![0, 1])]).unwrap()
    }

    fn z_on_a() -> GroupOracle {
        let al = Arc::new(Alphabet::with_inverses(&["a"]).unwrap());
        let a = al.letter("a").unwrap();
        GroupOracle::abelian(al, 1, &[(a, vec![1])]).unwrap()
    }

    fn w(o: &GroupOracle, s: &str) -> Word {
        o.alphabet().parse_word(s).unwrap()
    }

    #[test]
    fn identity_examples() {
        let z2 = z2();
        assert!(z2.is_identity(&w(&z2, "abAB")));
        let free = GroupOracle::free(ab());
        assert!(!free.is_identity(&w(&free, "abAB")));
        assert!(free.is_identity(&w(&free, "abBA")));
        let al = Arc::new(Alphabet::with_inverses(&["a"]).unwrap());
        let z3 = GroupOracle::cyclic(al.clone(), 3, al.letter("a").unwrap()).unwrap();
        assert!(z3.is_identity(&w(&z3, "aaa")));
        assert!(!z3.is_identity(&w(&z3, "aa")));
        assert!(z3.is_identity(&w(&z3, "aA")));
    }

    #[test]
    fn distance_examples() {
        let z2 = z2();
        assert_eq!(z2.distance(&w(&z2, "ab"), &w(&z2, "ba"), 5), Some(0));
        assert_eq!(z2.distance(&w(&z2, "a"), &w(&z2, "b"), 5), Some(2));
        assert_eq!(z2.distance(&w(&z2, "a"), &w(&z2, "b"), 1), None);
        let free = GroupOracle::free(ab());
        assert_eq!(free.distance(&Word::empty(), &w(&free, "abAB"), 10), Some(4));
    }

    #[test]
    fn ball_examples() {
        assert_eq!(z2().ball(0).unwrap().len(), 1);
        assert_eq!(z_on_a().ball(2).unwrap().len(), 5);
        assert_eq!(z2().ball(1).unwrap().len(), 5);
        assert_eq!(z2().ball(3).unwrap().len(), 25);
        let free = GroupOracle::free(ab());
        assert_eq!(free.ball(2).unwrap().len(), 17);
        assert_eq!(
            free.ball_with_cap(6, 100).unwrap_err(),
            Error::BallCapExceeded { cap: 100, radius: 6 }
        );
    }

    #[test]
    fn ball_invariants() {
        let o = z2();
        let ball = o.ball(4).unwrap();
        assert_eq!(ball.dist[0], 0);
        for g in 0..ball.len() {
            assert_eq!(ball.words[g].len(), ball.dist[g]);
            assert_eq!(ball.index_of(&o.class_of(&ball.words[g])), Some(g));
            for h in ball.right[g].iter().flatten() {
                assert!(ball.dist[g].abs_diff(ball.dist[*h]) <= 1);
            }
        }
        // shortlex-least geodesic of (-1, 1) is "Ab"
        let g = ball.index_of(&Element::Abelian(vec![-1, 1])).unwrap();
        assert_eq!(o.alphabet().format_word(&ball.words[g]), "Ab");
    }

    #[test]
    fn ft_distance_examples() {
        let o = z2();
        let m = Metric::new(&o, 10);
        let x = w(&o, "abAbb");
        assert_eq!(m.ft_distance(FtMode::Sync, &x, &x), Some(0));
        assert_eq!(m.ft_distance(FtMode::Async, &x, &x), Some(0));
        assert_eq!(m.ft_distance(FtMode::Sync, &w(&o, "ab"), &w(&o, "ba")), Some(2));
        // (ε,ε) → (a,ε) → (ab,b) → (ab,ba) stays within distance 1
        assert_eq!(m.ft_distance(FtMode::Async, &w(&o, "ab"), &w(&o, "ba")), Some(1));
        // waiting lets the async distance drop
        assert_eq!(m.ft_distance(FtMode::Sync, &w(&o, "bb"), &w(&o, "abb")), Some(2));
        assert_eq!(m.ft_distance(FtMode::Async, &w(&o, "bb"), &w(&o, "abb")), Some(1));
        assert_eq!(o.ft_distance(FtMode::Sync, &w(&o, "aaaa"), &w(&o, "AAAA"), 3), None);
    }

    #[test]
    fn cayley_transducer_examples() {
        use crate::transduce::accepts_pair;
        let o = z_on_a();
        let t = o.cayley_transducer(&w(&o, "A"), 2).unwrap();
        assert!(accepts_pair(&t, &w(&o, "a"), &Word::empty()));
        assert!(accepts_pair(&t, &w(&o, "aa"), &w(&o, "a")));
        assert!(!accepts_pair(&t, &w(&o, "a"), &w(&o, "a")));
        assert!(o.cayley_transducer(&w(&o, "AAA"), 2).is_err());
    }

    use proptest::prelude::*;

    fn arb_word() -> impl Strategy<Value = Word> {
        proptest::collection::vec(0u16..4, 0..7).prop_map(|v| Word::from_indices(&v))
    }

    proptest! {
        #[test]
        fn fellow_traveler_laws(u in arb_word(), v in arb_word(), x in arb_word()) {
            let o = z2();
            let m = Metric::new(&o, 30);
            let ds = |p: &Word, q: &Word| m.ft_distance(FtMode::Sync, p, q).unwrap();
            let da = |p: &Word, q: &Word| m.ft_distance(FtMode::Async, p, q).unwrap();
            prop_assert_eq!(ds(&u, &u), 0);
            prop_assert!(da(&u, &v) <= ds(&u, &v));
            prop_assert_eq!(ds(&u, &v), ds(&v, &u));
            prop_assert!(ds(&u, &x) <= ds(&u, &v) + ds(&v, &x));
            prop_assert!(ds(&u, &u.concat(&x)) <= x.len());
            prop_assert_eq!(m.dist(&o.class_of(&u), &o.class_of(&v)), o.distance(&u, &v, 30));
        }
    }
}
