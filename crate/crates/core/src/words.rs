//! Alphabets with formal inverses, words, free reduction and shortlex order.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// Index of a letter in its [`Alphabet`]; the index order is the shortlex order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u16);

impl Letter {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A finite sequence of letters. The empty word is the monoid identity.
///
/// `Ord` on words is the shortlex order induced by letter indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_indices(indices: &[u16]) -> Self {
        Word(indices.iter().map(|&i| Letter(i)).collect())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word(self.0[..len.min(self.0.len())].to_vec())
    }
}

impl Deref for Word {
    type Target = [Letter];
    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

/// A finite, totally ordered letter set with a fixed-point-free inverse involution.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<String>,
    inverse: Vec<Letter>,
}

impl Alphabet {
    /// Builds an alphabet from its ordered symbols and the inverse pairs.
    /// Every symbol must occur in exactly one pair.
    pub fn new<S: AsRef<str>>(symbols: &[S], pairs: &[(S, S)]) -> Result<Self> {
        let symbols: Vec<String> = symbols.iter().map(|s| s.as_ref().to_string()).collect();
        if symbols.len() > u16::MAX as usize {
            return Err(Error::InvalidAlphabet("too many letters".into()));
        }
        let mut index = HashMap::new();
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty() || s == "-" || s.chars().any(char::is_whitespace) {
                return Err(Error::InvalidAlphabet(format!("illegal symbol `{s}`")));
            }
            if index.insert(s.as_str(), i).is_some() {
                return Err(Error::InvalidAlphabet(format!("duplicate symbol `{s}`")));
            }
        }
        let mut inverse: Vec<Option<Letter>> = vec![None; symbols.len()];
        for (x, y) in pairs {
            let (x, y) = (x.as_ref(), y.as_ref());
            let i = *index.get(x).ok_or_else(|| Error::UnknownSymbol(x.to_string()))?;
            let j = *index.get(y).ok_or_else(|| Error::UnknownSymbol(y.to_string()))?;
            if i == j {
                return Err(Error::InvalidAlphabet(format!("`{x}` cannot be its own inverse")));
            }
            if inverse[i].is_some() || inverse[j].is_some() {
                return Err(Error::InvalidAlphabet(format!(
                    "inverse of `{x}` or `{y}` declared twice"
                )));
            }
            inverse[i] = Some(Letter(j as u16));
            inverse[j] = Some(Letter(i as u16));
        }
        let inverse = inverse
            .into_iter()
            .enumerate()
            .map(|(i, x)| x.ok_or_else(|| Error::InvalidAlphabet(format!("`{}` has no inverse", symbols[i]))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Alphabet { symbols, inverse })
    }

    /// Free generators paired with upper-case inverses, ordered `a < A < b < B < ...`.
    pub fn with_inverses(generators: &[&str]) -> Result<Self> {
        let mut symbols = Vec::new();
        let mut pairs = Vec::new();
        for g in generators {
            let inv = if g.chars().all(|c| c.is_lowercase()) {
                g.to_uppercase()
            } else {
                format!("{g}'")
            };
            symbols.push(g.to_string());
            symbols.push(inv.clone());
            pairs.push((g.to_string(), inv));
        }
        Alphabet::new(&symbols, &pairs)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.symbols.len()).map(|i| Letter(i as u16))
    }

    pub fn symbol(&self, x: Letter) -> &str {
        &self.symbols[x.index()]
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn letter(&self, symbol: &str) -> Result<Letter> {
        self.symbols
            .iter()
            .position(|s| s == symbol)
            .map(|i| Letter(i as u16))
            .ok_or_else(|| Error::UnknownSymbol(symbol.to_string()))
    }

    pub fn inverse(&self, x: Letter) -> Letter {
        self.inverse[x.index()]
    }

    /// Checks that every index in `w` names a letter of this alphabet.
    pub fn check_word(&self, w: &Word) -> Result<()> {
        match w.iter().find(|x| x.index() >= self.len()) {
            Some(x) => Err(Error::LetterOutOfRange {
                index: x.index(),
                size: self.len(),
            }),
            None => Ok(()),
        }
    }

    /// Parses a word by greedy longest-symbol matching. `-`, `ε` and the empty
    /// string denote the empty word; whitespace is ignored.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() || text == "-" || text == "ε" {
            return Ok(Word::empty());
        }
        let mut out = Vec::new();
        let mut rest = text.as_str();
        while !rest.is_empty() {
            let best = self
                .symbols
                .iter()
                .enumerate()
                .filter(|(_, s)| rest.starts_with(s.as_str()))
                .max_by_key(|(_, s)| s.len());
            match best {
                Some((i, s)) => {
                    out.push(Letter(i as u16));
                    rest = &rest[s.len()..];
                }
                None => {
                    let c = rest.chars().next().unwrap_or_default();
                    return Err(Error::UnknownSymbol(c.to_string()));
                }
            }
        }
        Ok(Word(out))
    }

    /// Formats a word; the empty word prints as `ε`.
    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "ε".to_string();
        }
        let single = self.symbols.iter().all(|s| s.chars().count() == 1);
        let parts: Vec<&str> = w.iter().map(|&x| self.symbol(x)).collect();
        if single {
            parts.concat()
        } else {
            parts.join(" ")
        }
    }

    pub fn free_reduce(&self, w: &Word) -> Word {
        free_reduce(self, w)
    }

    pub fn invert_word(&self, w: &Word) -> Word {
        invert_word(self, w)
    }

    pub fn is_freely_reduced(&self, w: &Word) -> bool {
        w.windows(2).all(|p| self.inverse(p[0]) != p[1])
    }

    /// Shortlex comparison of two words over this alphabet.
    pub fn shortlex_compare(&self, u: &Word, v: &Word) -> Result<Ordering> {
        self.check_word(u)?;
        self.check_word(v)?;
        Ok(u.cmp(v))
    }
}

/// Cancels adjacent `x·inv(x)` pairs until none remain.
pub fn free_reduce(alphabet: &Alphabet, w: &Word) -> Word {
    let mut stack: Vec<Letter> = Vec::with_capacity(w.len());
    for &x in w.iter() {
        match stack.last() {
            Some(&top) if alphabet.inverse(top) == x => {
                stack.pop();
            }
            _ => stack.push(x),
        }
    }
    Word(stack)
}

/// Reverses `w` and replaces every letter by its inverse.
pub fn invert_word(alphabet: &Alphabet, w: &Word) -> Word {
    Word(w.iter().rev().map(|&x| alphabet.inverse(x)).collect())
}

/// Distance from a letter to the center of its word, stored doubled so that
/// half-integers compare exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CenterDistance {
    doubled: u64,
}

impl CenterDistance {
    pub fn from_doubled(doubled: u64) -> Self {
        CenterDistance { doubled }
    }

    pub fn doubled(self) -> u64 {
        self.doubled
    }

    pub fn numerator_denominator(self) -> (u64, u64) {
        if self.doubled.is_multiple_of(2) {
            (self.doubled / 2, 1)
        } else {
            (self.doubled, 2)
        }
    }

    /// True iff the distance is at most the integer `k`.
    pub fn within(self, k: u64) -> bool {
        self.doubled <= 2 * k
    }

    pub fn as_f64(self) -> f64 {
        self.doubled as f64 / 2.0
    }
}

impl fmt::Display for CenterDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.numerator_denominator() {
            (n, 1) => write!(f, "{n}"),
            (n, d) => write!(f, "{n}/{d}"),
        }
    }
}

/// `|i - (n+1)/2|` for the letter at 1-based position `i` of a word of length `n`.
pub fn center_distance(len: usize, position: usize) -> Result<CenterDistance> {
    if position == 0 || position > len {
        return Err(Error::PositionOutOfRange { position, len });
    }
    let doubled = (2 * position as i64 - (len as i64 + 1)).unsigned_abs();
    Ok(CenterDistance { doubled })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ab() -> Alphabet {
        Alphabet::with_inverses(&["a", "b"]).unwrap()
    }

    fn w(s: &str) -> Word {
        ab().parse_word(s).unwrap()
    }

    #[test]
    fn free_reduction_examples() {
        let al = ab();
        assert_eq!(free_reduce(&al, &w("aA")), Word::empty());
        assert_eq!(free_reduce(&al, &w("abBA")), Word::empty());
        assert_eq!(free_reduce(&al, &w("abA")), w("abA"));
    }

    #[test]
    fn inversion_examples() {
        let al = ab();
        assert_eq!(invert_word(&al, &w("ab")), w("BA"));
        assert_eq!(invert_word(&al, &Word::empty()), Word::empty());
        assert_eq!(invert_word(&al, &w("aBa")), w("AbA"));
    }

    #[test]
    fn shortlex_examples() {
        let al = ab();
        assert_eq!(al.shortlex_compare(&w("b"), &w("ab")), Ok(Ordering::Less));
        assert_eq!(al.shortlex_compare(&w("ab"), &w("aA")), Ok(Ordering::Greater));
        assert_eq!(al.shortlex_compare(&w("ab"), &w("ab")), Ok(Ordering::Equal));
        let foreign = Word::from_indices(&[7]);
        assert!(al.shortlex_compare(&foreign, &w("a")).is_err());
    }

    #[test]
    fn center_distance_examples() {
        assert_eq!(center_distance(3, 2).unwrap(), CenterDistance::from_doubled(0));
        assert_eq!(center_distance(2, 1).unwrap().to_string(), "1/2");
        assert_eq!(center_distance(1, 1).unwrap().doubled(), 0);
        assert!(center_distance(2, 0).is_err());
        assert!(center_distance(2, 3).is_err());
    }

    #[test]
    fn alphabet_validation() {
        assert!(Alphabet::new(&["a", "A"], &[("a", "a")]).is_err());
        assert!(Alphabet::new(&["a", "A", "b"], &[("a", "A")]).is_err());
        assert!(Alphabet::new(&["a", "a"], &[("a", "a")]).is_err());
        let al = Alphabet::new(&["x1", "X1"], &[("x1", "X1")]).unwrap();
        let word = al.parse_word("x1X1x1").unwrap();
        assert_eq!(word.len(), 3);
        assert_eq!(al.format_word(&word), "x1 X1 x1");
    }

    #[test]
    fn translation_property_exhaustive() {
        let al = ab();
        let mut words = vec![Word::empty()];
        let mut frontier = vec![Word::empty()];
        for _ in 0..2 {
            let mut next = Vec::new();
            for u in &frontier {
                for x in al.letters() {
                    let mut v = u.clone();
                    v.0.push(x);
                    next.push(v);
                }
            }
            words.extend(next.iter().cloned());
            frontier = next;
        }
        for u in &words {
            for v in &words {
                if u >= v {
                    continue;
                }
                for x in words.iter().filter(|x| x.len() <= 1) {
                    for y in words.iter().filter(|y| y.len() <= 1) {
                        assert!(x.concat(u).concat(y) < x.concat(v).concat(y));
                    }
                }
            }
        }
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        proptest::collection::vec(0u16..4, 0..12).prop_map(|v| Word::from_indices(&v))
    }

    proptest! {
        #[test]
        fn reduction_is_idempotent_and_shrinking(u in arb_word()) {
            let al = ab();
            let r = free_reduce(&al, &u);
            prop_assert!(r.len() <= u.len());
            prop_assert_eq!(free_reduce(&al, &r).clone(), r.clone());
            prop_assert!(al.is_freely_reduced(&r));
            prop_assert!(free_reduce(&al, &u.concat(&invert_word(&al, &u))).is_empty());
        }

        #[test]
        fn inversion_commutes_with_reduction(u in arb_word()) {
            let al = ab();
            prop_assert_eq!(invert_word(&al, &invert_word(&al, &u)), u.clone());
            prop_assert_eq!(
                free_reduce(&al, &invert_word(&al, &u)),
                invert_word(&al, &free_reduce(&al, &u))
            );
        }
    }
}
