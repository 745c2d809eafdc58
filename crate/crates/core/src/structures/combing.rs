use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::group::{Element, FtMode, GroupOracle, Metric};
use crate::regular::{enumerate, minimize, Nfa};
use crate::words::{Alphabet, Word};

/// Outcome of checking that a regular language is a prefix-closed
/// automatic structure with uniqueness. Prefix closure is decided exactly;
/// the other properties are checked on members up to `maxlen` and, for
/// surjectivity, on the ball of radius `radius`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombingReport {
    pub radius: usize,
    pub maxlen: usize,
    pub members_checked: usize,
    pub prefix_closed: bool,
    /// a non-member that is a prefix of a member
    pub prefix_witness: Option<Word>,
    pub unique: bool,
    /// two members naming the same element
    pub duplicate: Option<(Word, Word)>,
    pub surjective_on_ball: bool,
    /// geodesic of an element of the ball no member reaches
    pub missing: Option<Word>,
    pub no_identity_subwords: bool,
    /// `(member, i, j)`: the subword `w[i..j]` is trivial in G
    pub trivial_subword: Option<(Word, usize, usize)>,
    pub ft_mode: Option<FtMode>,
    pub ft_bound: Option<usize>,
}

impl CombingReport {
    pub fn passed(&self) -> bool {
        self.prefix_closed && self.unique && self.surjective_on_ball && self.no_identity_subwords
    }

    pub fn violations(&self, alphabet: &Alphabet) -> Vec<String> {
        let f = |w: &Word| alphabet.format_word(w);
        let mut out = Vec::new();
        if let Some(p) = &self.prefix_witness {
            out.push(format!(
                "not prefix-closed: {} is a prefix of a member but not a member",
                f(p)
            ));
        }
        if let Some((u, v)) = &self.duplicate {
            out.push(format!("not unique: {} and {} name the same element", f(u), f(v)));
        }
        if let Some(m) = &self.missing {
            out.push(format!("not surjective: no member reaches the element of {}", f(m)));
        }
        if let Some((w, i, j)) = &self.trivial_subword {
            let sub = Word(w[*i..*j].to_vec());
            out.push(format!(
                "member {} has trivial subword {} at {}..{}",
                f(w),
                f(&sub),
                i,
                j
            ));
        }
        out
    }
}

impl fmt::Display for CombingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "prefix_closed={}", self.prefix_closed)?;
        writeln!(
            f,
            "unique={} (members up to length {}: {})",
            self.unique, self.maxlen, self.members_checked
        )?;
        writeln!(
            f,
            "surjective_on_ball={} (radius {})",
            self.surjective_on_ball, self.radius
        )?;
        writeln!(f, "no_identity_subwords={}", self.no_identity_subwords)?;
        if let Some(mode) = self.ft_mode {
            match self.ft_bound {
                Some(k) => writeln!(f, "ft_bound[{}]={}", mode.name(), k)?,
                None => writeln!(f, "ft_bound[{}]=unbounded within cap", mode.name())?,
            }
        }
        Ok(())
    }
}

fn check_alphabets(c: &Nfa, o: &GroupOracle) -> Result<()> {
    if c.alphabet() != o.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    Ok(())
}

/// Shortlex-least word reaching a non-final state of the trimmed minimal DFA,
/// i.e. the least prefix of a member that is not itself a member.
fn prefix_witness(c: &Nfa) -> Option<Word> {
    let d = minimize(c);
    let n = d.num_states();
    if (0..n).all(|s| !d.is_final(s)) {
        return None;
    }
    let mut parent: Vec<Option<(usize, crate::words::Letter)>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    seen[d.initial()] = true;
    queue.push_back(d.initial());
    while let Some(s) = queue.pop_front() {
        if !d.is_final(s) {
            let mut w = Vec::new();
            let mut cur = s;
            while let Some((p, x)) = parent[cur] {
                w.push(x);
                cur = p;
            }
            w.reverse();
            return Some(Word(w));
        }
        for x in c.alphabet().letters() {
            if let Some(t) = d.next(s, x) {
                if !seen[t] {
                    seen[t] = true;
                    parent[t] = Some((s, x));
                    queue.push_back(t);
                }
            }
        }
    }
    None
}

pub fn check_combing(c: &Nfa, o: &GroupOracle, radius: usize, maxlen: usize) -> Result<CombingReport> {
    check_alphabets(c, o)?;
    let prefix = prefix_witness(c);
    let members = enumerate(c, maxlen);
    let mut by_class: HashMap<Element, Word> = HashMap::new();
    let mut duplicate = None;
    let mut trivial = None;
    for w in &members {
        let prefixes = o.prefix_classes(w);
        if trivial.is_none() {
            let mut first: HashMap<&Element, usize> = HashMap::new();
            for (j, g) in prefixes.iter().enumerate() {
                if let Some(&i) = first.get(g) {
                    trivial = Some((w.clone(), i, j));
                    break;
                }
                first.insert(g, j);
            }
        }
        let g = prefixes.last().expect("prefix list is nonempty").clone();
        match by_class.get(&g) {
            Some(u) if duplicate.is_none() => duplicate = Some((u.clone(), w.clone())),
            Some(_) => {}
            None => {
                by_class.insert(g, w.clone());
            }
        }
    }
    let ball = o.ball(radius)?;
    let missing = (0..ball.len())
        .find(|&i| !by_class.contains_key(&ball.elements[i]))
        .map(|i| ball.words[i].clone());
    Ok(CombingReport {
        radius,
        maxlen,
        members_checked: members.len(),
        prefix_closed: prefix.is_none(),
        prefix_witness: prefix,
        unique: duplicate.is_none(),
        duplicate,
        surjective_on_ball: missing.is_none(),
        missing,
        no_identity_subwords: trivial.is_none(),
        trivial_subword: trivial,
        ft_mode: None,
        ft_bound: None,
    })
}

/// Empirical fellow-traveler bound of a combing: the largest distance over
/// pairs of members up to `maxlen` whose elements differ by a generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FtBoundReport {
    pub mode: FtMode,
    pub maxlen: usize,
    pub pairs: usize,
    /// `None` when some pair exceeds the metric cap
    pub bound: Option<usize>,
    pub worst: Option<(Word, Word)>,
}

pub fn ft_bound_of_combing(c: &Nfa, o: &GroupOracle, mode: FtMode, maxlen: usize, cap: usize) -> Result<FtBoundReport> {
    check_alphabets(c, o)?;
    let metric = Metric::new(o, cap);
    let members = enumerate(c, maxlen);
    let prefixes: Vec<Vec<Element>> = members.iter().map(|w| o.prefix_classes(w)).collect();
    let mut by_class: HashMap<&Element, Vec<usize>> = HashMap::new();
    for (i, p) in prefixes.iter().enumerate() {
        by_class.entry(p.last().expect("nonempty")).or_default().push(i);
    }
    let mut report = FtBoundReport {
        mode,
        maxlen,
        pairs: 0,
        bound: Some(0),
        worst: None,
    };
    let mut best = 0;
    for (i, pu) in prefixes.iter().enumerate() {
        let g = pu.last().expect("nonempty");
        let mut targets = vec![g.clone()];
        targets.extend(o.alphabet().letters().map(|x| o.mul_letter(g, x)));
        for h in &targets {
            let Some(js) = by_class.get(h) else { continue };
            for &j in js {
                if j < i && h != g {
                    // the reverse pair was measured from the other side
                    continue;
                }
                report.pairs += 1;
                match metric.ft_distance_classes(mode, pu, &prefixes[j]) {
                    None => {
                        report.bound = None;
                        report.worst = Some((members[i].clone(), members[j].clone()));
                        return Ok(report);
                    }
                    Some(d) if d > best || report.worst.is_none() => {
                        best = d;
                        report.worst = Some((members[i].clone(), members[j].clone()));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    report.bound = Some(best);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regular::{combine, CombineOp};
    use std::sync::Arc;

    fn al() -> Arc<Alphabet> {
        Arc::new(Alphabet::with_inverses(&["a", "b"]).unwrap())
    }

    fn w(s: &str) -> Word {
        al().parse_word(s).unwrap()
    }

    fn star(x: &str) -> Nfa {
        let mut n = Nfa::new(al(), 1, 0);
        n.add_edge(0, Some(al().letter(x).unwrap()), 0);
        n.add_terminal(0);
        n
    }

    fn z() -> GroupOracle {
        let a = al();
        let (x, y) = (a.letter("a").unwrap(), a.letter("b").unwrap());
        GroupOracle::abelian(a, 1, &[(x, vec![1]), (y, vec![0])]).unwrap()
    }

    fn z_only_a() -> GroupOracle {
        let a = Arc::new(Alphabet::with_inverses(&["a"]).unwrap());
        let x = a.letter("a").unwrap();
        GroupOracle::abelian(a, 1, &[(x, vec![1])]).unwrap()
    }

    #[test]
    fn integers_pass() {
        let o = z_only_a();
        let a = o.alphabet().clone();
        let c = crate::fixtures::integer_combing(a.clone());
        let r = check_combing(&c, &o, 6, 8).unwrap();
        assert!(r.passed(), "{r} {:?}", r.violations(&a));
        let ft = ft_bound_of_combing(&c, &o, FtMode::Sync, 8, 8).unwrap();
        assert_eq!(ft.bound, Some(1));
    }

    #[test]
    fn a_star_is_not_surjective() {
        let o = z_only_a();
        let a = o.alphabet().clone();
        let mut c = Nfa::new(a.clone(), 1, 0);
        c.add_edge(0, Some(a.letter("a").unwrap()), 0);
        c.add_terminal(0);
        let r = check_combing(&c, &o, 3, 6).unwrap();
        assert!(!r.surjective_on_ball);
        assert_eq!(r.missing, Some(a.parse_word("A").unwrap()));
        assert!(r.prefix_closed && r.unique);
    }

    #[test]
    fn extra_generator_breaks_uniqueness() {
        let o = z();
        let c = combine(CombineOp::Union, &star("a"), &star("A")).unwrap();
        let c = combine(CombineOp::Union, &c, &Nfa::from_words(al(), &[w("b")])).unwrap();
        let r = check_combing(&c, &o, 3, 5).unwrap();
        assert!(!r.unique);
        let (u, v) = r.duplicate.unwrap();
        let mut pair = [u, v];
        pair.sort();
        assert_eq!(pair, [w(""), w("b")]);
    }

    #[test]
    fn prefix_witness_is_exact() {
        let c = Nfa::from_words(al(), &[w(""), w("ab")]);
        let r = check_combing(&c, &z(), 0, 3).unwrap();
        assert_eq!(r.prefix_witness, Some(w("a")));
        assert!(!r.passed());
    }

    #[test]
    fn trivial_subwords_are_found() {
        let c = Nfa::from_words(al(), &[w(""), w("a"), w("ab")]);
        let r = check_combing(&c, &z(), 0, 3).unwrap();
        assert_eq!(r.trivial_subword, Some((w("ab"), 1, 2)));
    }
}
