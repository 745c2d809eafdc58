use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::GroupOracle;
use crate::linear::{intersect_regular, LinearLanguage};
use crate::regular::{freely_reduced_lang, trim, Nfa};
use crate::transduce::{strip_epsilon_cycles, trim_t, Transducer};
use crate::words::Word;

/// The generator language `{ u·a·v⁻¹ : u, v ∈ C, ū·ā = v̄ }`, freely reduced
/// and nonempty, as an inverse-mode linear language.
///
/// The pairs `(u, v)` are tracked by a lazy product of two copies of `c`
/// with the ball of radius `ft_bound`, each step moving one or both tapes
/// and updating the element `ū⁻¹·v̄`; pairs that drift further apart than
/// `ft_bound` are lost, so the result is complete only within that bound.
pub fn extract_generators(c: &Nfa, o: &GroupOracle, ft_bound: usize) -> Result<LinearLanguage> {
    if c.alphabet() != o.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let c = trim(c);
    let al = o.alphabet().clone();
    if c.terminals().is_empty() {
        return Ok(LinearLanguage::inverse_mode(Transducer::empty(al)));
    }
    let ball = o.ball(ft_bound)?;
    let moves = ball.move_table(o);
    let out = c.out_edges();
    let mut t = Transducer::new(al.clone(), 1, 0);
    let start = (c.initial(), c.initial(), 0usize);
    let mut index: HashMap<(usize, usize, usize), usize> = HashMap::new();
    let mut states = vec![start];
    index.insert(start, 0);
    let mut i = 0;
    while i < states.len() {
        let (p, q, g) = states[i];
        let mut targets = Vec::new();
        // ε-edges of c advance one copy without reading
        for &(x, p2) in &out[p] {
            if x.is_none() {
                targets.push(((None, None), (p2, q, g)));
            }
        }
        for &(y, q2) in &out[q] {
            if y.is_none() {
                targets.push(((None, None), (p, q2, g)));
            }
        }
        for &((a, b), h) in &moves[g] {
            let follow = |s: usize, x| -> Vec<usize> {
                match x {
                    None => vec![s],
                    Some(x) => out[s]
                        .iter()
                        .filter(|(l, _)| *l == Some(x))
                        .map(|&(_, s2)| s2)
                        .collect(),
                }
            };
            for &p2 in &follow(p, a) {
                for &q2 in &follow(q, b) {
                    targets.push(((a, b), (p2, q2, h)));
                }
            }
        }
        for (label, target) in targets {
            let id = *index.entry(target).or_insert_with(|| {
                states.push(target);
                t.add_state()
            });
            t.add_edge(i, label, id);
        }
        i += 1;
    }
    // close with (a, ε) where ū⁻¹·v̄ = ā
    let class_index: Vec<Option<usize>> = al
        .letters()
        .map(|x| ball.index_of(&o.class_of(&Word(vec![x]))))
        .collect();
    let done = t.add_state();
    t.add_terminal(done);
    for (id, &(p, q, g)) in states.iter().enumerate() {
        if c.terminals().contains(&p) && c.terminals().contains(&q) {
            for x in al.letters() {
                if class_index[x.index()] == Some(g) {
                    t.add_edge(id, (Some(x), None), done);
                }
            }
        }
    }
    let t = trim_t(&strip_epsilon_cycles(&trim_t(&t)));
    let l = LinearLanguage::inverse_mode(t);
    intersect_regular(&l, &freely_reduced_lang(al, false))
}
