//! Small standard inputs: the integers, the plane and a finite cyclic group.

use std::sync::Arc;

use crate::group::GroupOracle;
use crate::linear::LinearLanguage;
use crate::regular::Nfa;
use crate::transduce::Transducer;
use crate::words::Alphabet;

/// `{a, A, b, B}`.
pub fn alphabet_ab() -> Arc<Alphabet> {
    Arc::new(Alphabet::with_inverses(&["a", "b"]).expect("valid alphabet"))
}

/// `{a, A}`.
pub fn alphabet_a() -> Arc<Alphabet> {
    Arc::new(Alphabet::with_inverses(&["a"]).expect("valid alphabet"))
}

/// ℤ as a quotient of `F(a, b)`: `a ↦ 1`, `b ↦ 0`.
pub fn integers(al: Arc<Alphabet>) -> GroupOracle {
    let weights: Vec<_> = al
        .letters()
        .step_by(2)
        .enumerate()
        .map(|(i, x)| (x, vec![(i == 0) as i64]))
        .collect();
    GroupOracle::abelian(al, 1, &weights).expect("valid weights")
}

/// ℤ² with `a`, `b` the standard basis.
pub fn plane() -> GroupOracle {
    let al = alphabet_ab();
    let (a, b) = (al.letter("a").expect("a"), al.letter("b").expect("b"));
    GroupOracle::abelian(al, 2, &[(a, vec![1, 0]), (b, vec![0, 1])]).expect("valid weights")
}

/// `ℤ/n` generated by `a`.
pub fn cyclic(n: usize) -> GroupOracle {
    let al = alphabet_a();
    let a = al.letter("a").expect("a");
    GroupOracle::cyclic(al, n, a).expect("valid order")
}

/// `a* ∪ A*` over the given alphabet.
pub fn integer_combing(al: Arc<Alphabet>) -> Nfa {
    let (a, ai) = (al.letter("a").expect("a"), al.letter("A").expect("A"));
    let mut c = Nfa::new(al, 3, 0);
    c.add_edge(0, Some(a), 1);
    c.add_edge(1, Some(a), 1);
    c.add_edge(0, Some(ai), 2);
    c.add_edge(2, Some(ai), 2);
    c.set_terminals([0, 1, 2]);
    c
}

/// `{aⁿbAⁿ} ∪ {Aⁿbaⁿ}`: loops `(a,a)` and `(A,A)` at separate vertices, then
/// `(b, ε)` to the terminal.
pub fn integer_generators() -> LinearLanguage {
    let al = alphabet_ab();
    let l = |s: &str| Some(al.letter(s).expect("letter"));
    let mut t = Transducer::new(al.clone(), 4, 0);
    t.add_edge(0, (l("a"), l("a")), 1);
    t.add_edge(1, (l("a"), l("a")), 1);
    t.add_edge(0, (l("A"), l("A")), 2);
    t.add_edge(2, (l("A"), l("A")), 2);
    for s in 0..3 {
        t.add_edge(s, (l("b"), None), 3);
    }
    t.add_terminal(3);
    LinearLanguage::inverse_mode(t)
}

/// Shortlex normal forms of ℤ²: an `a`-block then a `b`-block.
pub fn plane_combing() -> Nfa {
    let al = alphabet_ab();
    let l = |s: &str| Some(al.letter(s).expect("letter"));
    let mut n = Nfa::new(al.clone(), 5, 0);
    n.add_edge(0, l("a"), 1);
    n.add_edge(1, l("a"), 1);
    n.add_edge(0, l("A"), 2);
    n.add_edge(2, l("A"), 2);
    for s in 0..3 {
        n.add_edge(s, l("b"), 3);
        n.add_edge(s, l("B"), 4);
    }
    n.add_edge(3, l("b"), 3);
    n.add_edge(4, l("B"), 4);
    n.set_terminals(0..5);
    n
}

/// The single relator `aⁿ` for `ℤ/n`, as an acyclic transducer on the first tape.
pub fn power_relator(n: usize) -> LinearLanguage {
    let al = alphabet_a();
    let a = al.letter("a").expect("a");
    let mut t = Transducer::new(al, n + 1, 0);
    for i in 0..n {
        t.add_edge(i, (Some(a), None), i + 1);
    }
    t.add_terminal(n);
    LinearLanguage::inverse_mode(t)
}
