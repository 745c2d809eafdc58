use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::words::{center_distance, invert_word, Alphabet, CenterDistance, Letter, Word};

/// A freely reduced nonempty word `w = u·a·v⁻¹` with the 1-based position of
/// its significant letter `a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SigWord {
    word: Word,
    sig: usize,
}

impl SigWord {
    pub fn new(alphabet: &Alphabet, word: Word, sig: usize) -> Result<Self> {
        alphabet.check_word(&word)?;
        if word.is_empty() {
            return Err(Error::EmptyWord);
        }
        if !alphabet.is_freely_reduced(&word) {
            return Err(Error::NotFreelyReduced(alphabet.format_word(&word)));
        }
        if sig == 0 || sig > word.len() {
            return Err(Error::PositionOutOfRange {
                position: sig,
                len: word.len(),
            });
        }
        Ok(SigWord { word, sig })
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn sig(&self) -> usize {
        self.sig
    }

    pub fn letter(&self) -> Letter {
        self.word[self.sig - 1]
    }

    /// `(u, a, v)` with `w = u·a·v⁻¹`.
    pub fn parts(&self, alphabet: &Alphabet) -> (Word, Letter, Word) {
        let u = Word(self.word[..self.sig - 1].to_vec());
        let tail = Word(self.word[self.sig..].to_vec());
        (u, self.letter(), invert_word(alphabet, &tail))
    }

    /// `w⁻¹ = v·a⁻¹·u⁻¹`, significant letter mirrored.
    pub fn inverse(&self, alphabet: &Alphabet) -> SigWord {
        SigWord {
            word: invert_word(alphabet, &self.word),
            sig: self.word.len() + 1 - self.sig,
        }
    }

    pub fn center_distance(&self) -> CenterDistance {
        center_distance(self.word.len(), self.sig).expect("position validated")
    }

    pub fn display(&self, alphabet: &Alphabet) -> String {
        let w = &self.word;
        let part = |r: &[Letter]| {
            if r.is_empty() {
                String::new()
            } else {
                alphabet.format_word(&Word(r.to_vec()))
            }
        };
        format!(
            "{}[{}]{}",
            part(&w[..self.sig - 1]),
            alphabet.symbol(self.letter()),
            part(&w[self.sig..])
        )
    }
}

/// Number of letters cancelled when the freely reduced words `x·y` are reduced.
pub(crate) fn cancellation(alphabet: &Alphabet, x: &[Letter], y: &[Letter]) -> usize {
    x.iter()
        .rev()
        .zip(y.iter())
        .take_while(|(&a, &b)| alphabet.inverse(a) == b)
        .count()
}

/// A product of two sample words whose reduction reaches a significant letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigViolation {
    pub left: SigWord,
    pub right: SigWord,
    /// freely reduced product
    pub product: Word,
}

impl SigViolation {
    pub fn describe(&self, alphabet: &Alphabet) -> String {
        format!(
            "({})·({}) reduces to {}",
            self.left.display(alphabet),
            self.right.display(alphabet),
            alphabet.format_word(&self.product)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SigVerdict {
    Pass { products: usize },
    Violation(SigViolation),
}

impl SigVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, SigVerdict::Pass { .. })
    }
}

fn product(x: &Word, y: &Word, c: usize) -> Word {
    let mut p = x[..x.len() - c].to_vec();
    p.extend_from_slice(&y[c..]);
    Word(p)
}

/// Checks every ordered product `w₁^{±1}·w₂^{±1}` of the sample: free
/// reduction may touch neither significant letter unless the product is
/// trivial. A violation is a proof of failure; a pass only covers the sample.
pub fn check_significant(alphabet: &Alphabet, words: &[SigWord], require_closure: bool) -> Result<SigVerdict> {
    for w in words {
        SigWord::new(alphabet, w.word.clone(), w.sig)?;
    }
    let mut sample: BTreeSet<SigWord> = words.iter().cloned().collect();
    if require_closure {
        sample.extend(words.iter().map(|w| w.inverse(alphabet)));
    }
    let signed: Vec<SigWord> = sample.iter().flat_map(|w| [w.clone(), w.inverse(alphabet)]).collect();
    let mut products = 0;
    for x in &signed {
        for y in &signed {
            products += 1;
            let c = cancellation(alphabet, &x.word, &y.word);
            if c == x.word.len() && c == y.word.len() {
                continue;
            }
            let hits_left = x.sig > x.word.len() - c;
            let hits_right = y.sig <= c;
            if hits_left || hits_right {
                return Ok(SigVerdict::Violation(SigViolation {
                    left: x.clone(),
                    right: y.clone(),
                    product: product(&x.word, &y.word, c),
                }));
            }
        }
    }
    Ok(SigVerdict::Pass { products })
}

/// Why no assignment exists: a word whose admissible window is empty, with
/// the products that close it from the left and from the right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigObstruction {
    pub word: Word,
    /// `(left factor, right factor, reduced product)`
    pub products: Vec<(Word, Word, Word)>,
}

impl SigObstruction {
    pub fn describe(&self, alphabet: &Alphabet) -> String {
        let parts: Vec<String> = self
            .products
            .iter()
            .map(|(x, y, p)| {
                format!(
                    "({})·({}) reduces to {}",
                    alphabet.format_word(x),
                    alphabet.format_word(y),
                    alphabet.format_word(p)
                )
            })
            .collect();
        format!(
            "no position of {} survives: {}",
            alphabet.format_word(&self.word),
            parts.join("; ")
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SigSearch {
    Found(Vec<SigWord>),
    Impossible(SigObstruction),
}

/// Admissible significant positions `lo < sig ≤ hi` of a word against an
/// inverse-closed sample, with the partners that cut the window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Window {
    pub lo: usize,
    pub hi: usize,
    pub left_by: Option<Word>,
    pub right_by: Option<Word>,
}

impl Window {
    pub fn is_empty(&self) -> bool {
        self.lo >= self.hi
    }

    pub fn contains(&self, s: usize) -> bool {
        self.lo < s && s <= self.hi
    }
}

pub(crate) fn window(alphabet: &Alphabet, sample: &[Word], w: &Word) -> Window {
    let n = w.len();
    let (mut lo, mut left_by) = (0, None);
    let (mut cut, mut right_by) = (0, None);
    for y in sample {
        let c = cancellation(alphabet, y, w);
        if !(c == n && c == y.len()) && c > lo {
            lo = c;
            left_by = Some(y.clone());
        }
        let c = cancellation(alphabet, w, y);
        if !(c == n && c == y.len()) && c > cut {
            cut = c;
            right_by = Some(y.clone());
        }
    }
    Window {
        lo,
        hi: n.saturating_sub(cut),
        left_by,
        right_by,
    }
}

/// Finds significant positions for a sample closed under inversion, with
/// `w⁻¹` always taking the mirrored position of `w`.
///
/// Whether a product cancels a significant letter depends only on the two
/// words and that letter's position, so the constraints on each word reduce
/// to a window `lo < sig ≤ hi`; an empty window is an exact obstruction.
/// Among admissible positions the one closest to the center is chosen.
pub fn search_significant(alphabet: &Alphabet, words: &[Word]) -> Result<SigSearch> {
    for w in words {
        alphabet.check_word(w)?;
        if w.is_empty() {
            return Err(Error::EmptyWord);
        }
        if !alphabet.is_freely_reduced(w) {
            return Err(Error::NotFreelyReduced(alphabet.format_word(w)));
        }
    }
    let sample: BTreeSet<Word> = words
        .iter()
        .flat_map(|w| [w.clone(), invert_word(alphabet, w)])
        .collect();
    let sample: Vec<Word> = sample.into_iter().collect();
    let mut chosen: BTreeMap<Word, usize> = BTreeMap::new();
    for w in &sample {
        let inv = invert_word(alphabet, w);
        if chosen.contains_key(w) {
            continue;
        }
        let rep = if inv < *w { &inv } else { w };
        let n = rep.len();
        let win = window(alphabet, &sample, rep);
        if win.is_empty() {
            let mut products = Vec::new();
            if let Some(y) = win.right_by {
                let c = cancellation(alphabet, rep, &y);
                products.push((rep.clone(), y.clone(), product(rep, &y, c)));
            }
            if let Some(y) = win.left_by {
                let c = cancellation(alphabet, &y, rep);
                products.push((y.clone(), rep.clone(), product(&y, rep, c)));
            }
            return Ok(SigSearch::Impossible(SigObstruction {
                word: rep.clone(),
                products,
            }));
        }
        let sig = (win.lo + 1..=win.hi)
            .min_by_key(|&s| (2 * s as i64 - (n as i64 + 1)).abs())
            .expect("nonempty window");
        chosen.insert(rep.clone(), sig);
        chosen.insert(invert_word(alphabet, rep), n + 1 - sig);
    }
    let found = words
        .iter()
        .map(|w| SigWord::new(alphabet, w.clone(), chosen[w]))
        .collect::<Result<Vec<_>>>()?;
    Ok(SigSearch::Found(found))
}

/// Centrality profile of a sample of significant letters.
#[derive(Debug, Clone, PartialEq)]
pub struct CentralReport {
    /// verdict for the requested `k`; `None` when no `k` was given
    pub pass: Option<bool>,
    pub max_distance: CenterDistance,
    pub worst: Option<SigWord>,
    /// largest distance / length ratio; a bounded proxy for o-centrality,
    /// inconclusive by nature
    pub max_ratio: f64,
    /// `(length, largest center distance at that length)`
    pub profile: Vec<(usize, CenterDistance)>,
}

/// Checks `k`-centrality of every significant letter, or profiles the
/// distances when no `k` is given.
pub fn check_central(words: &[SigWord], k: Option<u64>) -> CentralReport {
    let mut by_len: BTreeMap<usize, CenterDistance> = BTreeMap::new();
    let mut worst: Option<&SigWord> = None;
    let mut max_distance = CenterDistance::default();
    let mut max_ratio = 0.0f64;
    for w in words {
        let d = w.center_distance();
        let e = by_len.entry(w.word.len()).or_default();
        *e = (*e).max(d);
        if worst.is_none() || d > max_distance {
            max_distance = d;
            worst = Some(w);
        }
        max_ratio = max_ratio.max(d.as_f64() / w.word.len() as f64);
    }
    CentralReport {
        pass: k.map(|k| max_distance.within(k)),
        max_distance,
        worst: worst.cloned(),
        max_ratio,
        profile: by_len.into_iter().collect(),
    }
}

impl fmt::Display for CentralReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "max_center_distance={}", self.max_distance)?;
        writeln!(f, "max_ratio={:.4}", self.max_ratio)?;
        for (len, d) in &self.profile {
            writeln!(f, "length {len}: {d}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn al() -> Alphabet {
        Alphabet::with_inverses(&["a", "b", "c"]).unwrap()
    }

    fn w(s: &str) -> Word {
        al().parse_word(s).unwrap()
    }

    fn conjugates(n: usize) -> Vec<SigWord> {
        (0..=n)
            .map(|i| {
                let s = format!("{}b{}", "a".repeat(i), "A".repeat(i));
                SigWord::new(&al(), w(&s), i + 1).unwrap()
            })
            .collect()
    }

    #[test]
    fn sigword_validation_and_inverse() {
        let a = al();
        assert_eq!(SigWord::new(&a, Word::empty(), 1), Err(Error::EmptyWord));
        assert!(matches!(SigWord::new(&a, w("aAb"), 1), Err(Error::NotFreelyReduced(_))));
        assert!(SigWord::new(&a, w("ab"), 3).is_err());
        let s = SigWord::new(&a, w("abc"), 2).unwrap();
        let inv = s.inverse(&a);
        assert_eq!(inv.word(), &w("CBA"));
        assert_eq!(inv.sig(), 2);
        let (u, x, v) = s.parts(&a);
        assert_eq!((u, x, v), (w("a"), a.letter("b").unwrap(), w("C")));
    }

    #[test]
    fn conjugates_pass() {
        let verdict = check_significant(&al(), &conjugates(4), true).unwrap();
        assert!(verdict.passed());
    }

    #[test]
    fn overlapping_pair_fails_for_every_assignment() {
        let a = al();
        for s1 in 1..=2 {
            for s2 in 1..=3 {
                let sample = [
                    SigWord::new(&a, w("ab"), s1).unwrap(),
                    SigWord::new(&a, w("BAc"), s2).unwrap(),
                ];
                let verdict = check_significant(&a, &sample, false).unwrap();
                let SigVerdict::Violation(v) = verdict else {
                    panic!("assignment ({s1},{s2}) passed")
                };
                assert!(!v.product.is_empty());
            }
        }
    }

    #[test]
    fn singleton_passes() {
        let sample = [SigWord::new(&al(), w("ab"), 1).unwrap()];
        assert!(check_significant(&al(), &sample, false).unwrap().passed());
    }

    #[test]
    fn search_examples() {
        let a = al();
        match search_significant(&a, &[w("b")]).unwrap() {
            SigSearch::Found(v) => assert_eq!(v[0].sig(), 1),
            other => panic!("{other:?}"),
        }
        let words: Vec<Word> = conjugates(3).iter().map(|s| s.word().clone()).collect();
        match search_significant(&a, &words).unwrap() {
            SigSearch::Found(v) => {
                for (s, expected) in v.iter().zip(conjugates(3)) {
                    assert_eq!(s.sig(), expected.sig());
                }
                assert!(check_significant(&a, &v, true).unwrap().passed());
            }
            other => panic!("{other:?}"),
        }
        match search_significant(&a, &[w("ab"), w("BAc")]).unwrap() {
            SigSearch::Impossible(obs) => {
                assert!(obs.products.iter().any(|(_, _, p)| *p == w("c") || *p == w("C")));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn search_result_always_passes_check() {
        let a = al();
        let words = [w("abA"), w("bab"), w("cAc"), w("aBcb")];
        if let SigSearch::Found(v) = search_significant(&a, &words).unwrap() {
            assert!(check_significant(&a, &v, true).unwrap().passed());
        }
    }

    #[test]
    fn central_examples() {
        let r = check_central(&conjugates(5), Some(0));
        assert_eq!(r.pass, Some(true));
        assert_eq!(r.max_distance.doubled(), 0);
        let off = [SigWord::new(&al(), w("aab"), 3).unwrap()];
        let r = check_central(&off, Some(0));
        assert_eq!(r.pass, Some(false));
        assert_eq!(r.max_distance.to_string(), "1");
        assert_eq!(check_central(&off, None).pass, None);
    }
}
