//! Linear languages presented by transducers, read as `u·vʳ` or `u·v⁻¹`.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::regular::{inverse_language, reverse, split_decomposition, trim, CombineOp, Nfa};
use crate::transduce::{combine_t, enumerate_pairs_total, intersect_rect, trim_t, Transducer};
use crate::words::{invert_word, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// `{ u·vʳ : (u,v) ∈ τ }`
    Reversal,
    /// `{ u·v⁻¹ : (u,v) ∈ τ }`
    Inverse,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Reversal => "reversal",
            Mode::Inverse => "inverse",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearLanguage {
    pub transducer: Transducer,
    pub mode: Mode,
}

impl LinearLanguage {
    pub fn new(transducer: Transducer, mode: Mode) -> Self {
        LinearLanguage { transducer, mode }
    }

    pub fn inverse_mode(transducer: Transducer) -> Self {
        LinearLanguage::new(transducer, Mode::Inverse)
    }

    /// The word read off a pair of tape labels.
    pub fn word_of(&self, u: &Word, v: &Word) -> Word {
        match self.mode {
            Mode::Reversal => u.concat(&v.reversed()),
            Mode::Inverse => u.concat(&invert_word(self.transducer.alphabet(), v)),
        }
    }

    /// Rewrites to the inverse reading: `(a,b) ↦ (a, b⁻¹)`.
    pub fn to_inverse_mode(&self) -> LinearLanguage {
        match self.mode {
            Mode::Inverse => self.clone(),
            Mode::Reversal => {
                let al = self.transducer.alphabet().clone();
                let t = self.transducer.map_labels(|(a, b)| (a, b.map(|y| al.inverse(y))));
                LinearLanguage::new(t, Mode::Inverse)
            }
        }
    }
}

/// Membership by dynamic programming over (consumed from the left, consumed
/// from the right, state): the first tape reads `w` from its left end, the
/// second tape from its right end.
pub fn member(l: &LinearLanguage, w: &Word) -> bool {
    let t = &l.transducer;
    let al = t.alphabet();
    let n = w.len();
    let out = t.out_edges();
    let right_letter = |j: usize| {
        let x = w[n - 1 - j];
        match l.mode {
            Mode::Reversal => x,
            Mode::Inverse => al.inverse(x),
        }
    };
    let mut seen: HashSet<(usize, usize, usize)> = HashSet::new();
    let mut stack = vec![(t.initial(), 0usize, 0usize)];
    seen.insert((t.initial(), 0, 0));
    while let Some((s, i, j)) = stack.pop() {
        if i + j == n && t.terminals().contains(&s) {
            return true;
        }
        for &((a, b), to) in &out[s] {
            let (mut ni, mut nj) = (i, j);
            if let Some(a) = a {
                if ni + nj >= n || w[ni] != a {
                    continue;
                }
                ni += 1;
            }
            if let Some(b) = b {
                if ni + nj >= n || right_letter(nj) != b {
                    continue;
                }
                nj += 1;
            }
            if seen.insert((to, ni, nj)) {
                stack.push((to, ni, nj));
            }
        }
    }
    false
}

/// Union of two linear languages of the same mode.
pub fn combine_linear(l1: &LinearLanguage, l2: &LinearLanguage) -> Result<LinearLanguage> {
    if l1.mode != l2.mode {
        return Err(Error::ModeMismatch);
    }
    let t = combine_t(CombineOp::Union, &l1.transducer, &l2.transducer)?;
    Ok(LinearLanguage::new(t, l1.mode))
}

/// `L ∩ L(r)`: for each state `p` of the trimmed `r`, intersect `τ` with
/// `X_p × Y_p'`, where `Y_p'` is `Y_p⁻¹` (inverse mode) or `Y_pʳ` (reversal mode).
pub fn intersect_regular(l: &LinearLanguage, r: &Nfa) -> Result<LinearLanguage> {
    if l.transducer.alphabet() != r.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let r = trim(r);
    let t = trim_t(&l.transducer);
    let mut acc = Transducer::empty(t.alphabet().clone());
    if r.terminals().is_empty() || t.terminals().is_empty() {
        return Ok(LinearLanguage::new(acc, l.mode));
    }
    for (x, y) in split_decomposition(&r) {
        if x.terminals().is_empty() || y.terminals().is_empty() {
            continue;
        }
        let second = match l.mode {
            Mode::Inverse => inverse_language(&y),
            Mode::Reversal => reverse(&y),
        };
        let part = intersect_rect(&t, &x, &second)?;
        if part.terminals().is_empty() {
            continue;
        }
        acc = combine_t(CombineOp::Union, &acc, &part)?;
    }
    Ok(LinearLanguage::new(trim_t(&acc), l.mode))
}

/// `{ w : w⁻¹ ∈ L }` for an inverse-mode language. Under the `u·v⁻¹` reading
/// `(u·v⁻¹)⁻¹ = v·u⁻¹`, so the tapes are exchanged.
pub fn invert_linear(l: &LinearLanguage) -> Result<LinearLanguage> {
    match l.mode {
        Mode::Inverse => Ok(LinearLanguage::new(l.transducer.swap_tapes(), Mode::Inverse)),
        Mode::Reversal => Err(Error::ReversalInversion),
    }
}

/// Members of length at most `maxlen` read off accepted pairs, shortlex ordered.
pub fn enumerate_members(l: &LinearLanguage, maxlen: usize) -> Vec<Word> {
    let words: BTreeSet<Word> = enumerate_pairs_total(&l.transducer, maxlen)
        .iter()
        .map(|(u, v)| l.word_of(u, v))
        .collect();
    words.into_iter().collect()
}

/// Members with the length of their first-tape part, shortlex ordered.
pub fn enumerate_splits(l: &LinearLanguage, maxlen: usize) -> Vec<(Word, usize)> {
    let words: BTreeSet<(Word, usize)> = enumerate_pairs_total(&l.transducer, maxlen)
        .iter()
        .map(|(u, v)| (l.word_of(u, v), u.len()))
        .collect();
    words.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regular::freely_reduced_lang;
    use crate::words::{Alphabet, Letter};
    use std::sync::Arc;

    fn al() -> Arc<Alphabet> {
        Arc::new(Alphabet::with_inverses(&["a", "b"]).unwrap())
    }

    fn w(s: &str) -> Word {
        al().parse_word(s).unwrap()
    }

    fn l(s: &str) -> Option<Letter> {
        Some(al().letter(s).unwrap())
    }

    /// τ = {(aⁿb, aⁿ)}, read as {aⁿ b Aⁿ}
    fn conj(n_min: usize) -> LinearLanguage {
        let mut t = Transducer::new(al(), 2 + n_min, 0);
        for i in 0..n_min {
            t.add_edge(i, (l("a"), l("a")), i + 1);
        }
        t.add_edge(n_min, (l("a"), l("a")), n_min);
        t.add_edge(n_min, (l("b"), None), n_min + 1);
        t.add_terminal(n_min + 1);
        LinearLanguage::inverse_mode(t)
    }

    fn single_b() -> LinearLanguage {
        let mut t = Transducer::new(al(), 2, 0);
        t.add_edge(0, (l("b"), None), 1);
        t.add_terminal(1);
        LinearLanguage::inverse_mode(t)
    }

    fn brute(l: &LinearLanguage, maxlen: usize) -> BTreeSet<Word> {
        crate::regular::enumerate(&Nfa::universal(al()), maxlen)
            .into_iter()
            .filter(|x| member(l, x))
            .collect()
    }

    #[test]
    fn member_examples() {
        let c = conj(0);
        assert!(member(&c, &w("abA")));
        assert!(!member(&c, &w("ab")));
        assert!(member(&c, &w("b")));
        assert!(member(&c, &w("aabAA")));
        assert!(!member(&c, &w("abAA")));
    }

    #[test]
    fn reversal_mode_reads_second_tape_backwards() {
        let mut t = Transducer::new(al(), 2, 0);
        t.add_edge(0, (l("a"), l("b")), 1);
        t.add_edge(1, (l("a"), l("B")), 1);
        t.add_terminal(1);
        let rev = LinearLanguage::new(t, Mode::Reversal);
        assert!(member(&rev, &w("aaBb")));
        assert!(!member(&rev, &w("aabB")));
        let inv = rev.to_inverse_mode();
        for x in crate::regular::enumerate(&Nfa::universal(al()), 5) {
            assert_eq!(member(&rev, &x), member(&inv, &x));
        }
    }

    #[test]
    fn union_examples() {
        let u = combine_linear(&single_b(), &conj(1)).unwrap();
        let mut expected = brute(&single_b(), 7);
        expected.extend(brute(&conj(1), 7));
        assert_eq!(brute(&u, 7), expected);
        assert_eq!(brute(&combine_linear(&u, &u).unwrap(), 7), brute(&u, 7));
        let empty = LinearLanguage::inverse_mode(Transducer::empty(al()));
        assert_eq!(brute(&combine_linear(&u, &empty).unwrap(), 7), brute(&u, 7));
        let rev = LinearLanguage::new(Transducer::empty(al()), Mode::Reversal);
        assert_eq!(combine_linear(&u, &rev), Err(Error::ModeMismatch));
    }

    #[test]
    fn intersect_regular_examples() {
        let c = conj(0);
        let short = Nfa::from_words(al(), &crate::regular::enumerate(&Nfa::universal(al()), 3));
        let i = intersect_regular(&c, &short).unwrap();
        let expected: BTreeSet<Word> = [w("b"), w("abA")].into_iter().collect();
        assert_eq!(brute(&i, 5), expected);
        let all = intersect_regular(&c, &Nfa::universal(al())).unwrap();
        assert_eq!(brute(&all, 7), brute(&c, 7));
        let none = intersect_regular(&c, &Nfa::empty(al())).unwrap();
        assert!(brute(&none, 7).is_empty());
        let reduced = intersect_regular(&c, &freely_reduced_lang(al(), false)).unwrap();
        assert_eq!(brute(&reduced, 7), brute(&c, 7));
    }

    #[test]
    fn inversion_examples() {
        let c = conj(0);
        let inv = invert_linear(&c).unwrap();
        let expected: BTreeSet<Word> = brute(&c, 7).iter().map(|x| invert_word(&al(), x)).collect();
        assert_eq!(brute(&inv, 7), expected);
        assert!(member(&inv, &w("aBA")));
        assert_eq!(brute(&invert_linear(&inv).unwrap(), 7), brute(&c, 7));
        let b = invert_linear(&single_b()).unwrap();
        assert_eq!(brute(&b, 3), [w("B")].into_iter().collect());
        let rev = LinearLanguage::new(Transducer::empty(al()), Mode::Reversal);
        assert_eq!(invert_linear(&rev), Err(Error::ReversalInversion));
    }

    #[test]
    fn enumeration_matches_membership() {
        let u = combine_linear(&single_b(), &conj(1)).unwrap();
        let listed: BTreeSet<Word> = enumerate_members(&u, 7).into_iter().collect();
        assert_eq!(listed, brute(&u, 7));
    }

    use proptest::prelude::*;

    fn arb_linear() -> impl Strategy<Value = LinearLanguage> {
        (1usize..4, any::<bool>()).prop_flat_map(|(n, inverse)| {
            let side = proptest::option::of(0u16..4);
            let edge = (0..n, side.clone(), side, 0..n);
            (
                proptest::collection::vec(edge, 0..7),
                proptest::collection::btree_set(0..n, 0..=n),
            )
                .prop_map(move |(edges, finals)| {
                    let mut t = Transducer::new(al(), n, 0);
                    for (f, x, y, to) in edges {
                        t.add_edge(f, (x.map(Letter), y.map(Letter)), to);
                    }
                    t.set_terminals(finals);
                    LinearLanguage::new(t, if inverse { Mode::Inverse } else { Mode::Reversal })
                })
        })
    }

    proptest! {
        #[test]
        fn member_matches_enumeration(l in arb_linear(), v in proptest::collection::vec(0u16..4, 0..6)) {
            let listed: BTreeSet<Word> = enumerate_members(&l, 6).into_iter().collect();
            let w = Word::from_indices(&v);
            prop_assert_eq!(member(&l, &w), listed.contains(&w));
            for m in &listed {
                prop_assert!(member(&l, m));
                prop_assert!(member(&l.to_inverse_mode(), m));
            }
        }
    }
}
