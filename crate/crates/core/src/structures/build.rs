use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{CayleyBall, FtMode, GroupOracle};
use crate::linear::{combine_linear, enumerate_members, invert_linear, LinearLanguage};
use crate::regular::{combine, minimize, minimize_dfa, trim, CombineOp, Dfa, Nfa};
use crate::transduce::{intersect_rect, project, strip_epsilon_cycles, trim_t, Tape, Transducer};
use crate::words::{invert_word, Alphabet, Letter, Word};

use super::combing::{check_combing, ft_bound_of_combing, CombingReport, FtBoundReport};
use super::cycles::{check_balanced_cycles, core_subgraph, tail_length, CoreSubgraph};
use super::significant::{search_significant, window, SigSearch, Window};

pub const DEFAULT_STATE_CAP: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuildOptions {
    /// lower bound for the fellow-traveler constant
    pub ft_bound_hint: usize,
    /// balanced cycles: use and verify the synchronous condition
    pub central: bool,
    /// added to the empirical fellow-traveler bound
    pub margin: usize,
    /// length of the members sampled for significance and the bounds
    pub sample_len: usize,
    pub verify_radius: usize,
    pub verify_maxlen: usize,
    pub state_cap: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            ft_bound_hint: 0,
            central: false,
            margin: 2,
            sample_len: 8,
            verify_radius: 4,
            verify_maxlen: 8,
            state_cap: DEFAULT_STATE_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuildReport {
    pub transducer_states: usize,
    pub transducer_edges: usize,
    /// vertices + edges + 1
    pub big_k: usize,
    /// longest run of edges outside the core
    pub tail: usize,
    pub core_states: usize,
    pub core_edges: usize,
    /// sampled members of the inverse-closed language
    pub sample_size: usize,
    /// sampled paths checked for a significant letter outside the core
    pub upto_checked: usize,
    pub upto_violations: usize,
    pub c0_states: usize,
    pub ft_mode: FtMode,
    /// empirical bound on prefixes of the sample
    pub k_empirical: usize,
    /// bound derived from the automaton's size, `2K`
    pub k_structural: usize,
    pub k_used: usize,
    pub radius: usize,
    /// elements within `2·tail`, one shortlex-least geodesic each
    pub x_candidates: usize,
    /// suffixes chosen by at least one prefix
    pub x_used: Vec<Word>,
    pub neighbor_states: usize,
    pub result_states: usize,
    pub synchronized_shape: bool,
    pub balanced: bool,
    pub verification: CombingReport,
    pub ft_check: FtBoundReport,
}

impl BuildReport {
    /// The report as `key=value` lines.
    pub fn key_values(&self, alphabet: &Alphabet) -> Vec<(String, String)> {
        let mut kv: Vec<(String, String)> = Vec::new();
        let mut put = |k: &str, v: String| kv.push((k.to_string(), v));
        put("transducer_states", self.transducer_states.to_string());
        put("transducer_edges", self.transducer_edges.to_string());
        put("K", self.big_k.to_string());
        put("tail", self.tail.to_string());
        put("core_states", self.core_states.to_string());
        put("core_edges", self.core_edges.to_string());
        put("sample_size", self.sample_size.to_string());
        put("upto_checked", self.upto_checked.to_string());
        put("upto_violations", self.upto_violations.to_string());
        put("c0_states", self.c0_states.to_string());
        put("ft_mode", self.ft_mode.name().to_string());
        put("k_empirical", self.k_empirical.to_string());
        put("k_structural", self.k_structural.to_string());
        put("k_used", self.k_used.to_string());
        put("radius", self.radius.to_string());
        put("x_candidates", self.x_candidates.to_string());
        let used: Vec<String> = self.x_used.iter().map(|x| alphabet.format_word(x)).collect();
        put("x_used", used.join(","));
        put("neighbor_states", self.neighbor_states.to_string());
        put("result_states", self.result_states.to_string());
        put("balanced", self.balanced.to_string());
        put("synchronized_shape", self.synchronized_shape.to_string());
        put(
            "combing_check",
            if self.verification.passed() { "pass" } else { "fail" }.to_string(),
        );
        let ft = match self.ft_check.bound {
            Some(k) => k.to_string(),
            None => "exceeded".to_string(),
        };
        put(&format!("ft_bound_{}", self.ft_check.mode.name()), ft);
        kv
    }
}

impl fmt::Display for BuildReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "K={} tail={} k={} radius={}",
            self.big_k, self.tail, self.k_used, self.radius
        )?;
        writeln!(f, "|X|={} used={}", self.x_candidates, self.x_used.len())?;
        write!(f, "{}", self.verification)
    }
}

/// First-tape projection of the core with every state terminal.
pub fn first_combing_prefixes(t: &Transducer, core: &CoreSubgraph) -> Nfa {
    let mut b = Nfa::new(t.alphabet().clone(), t.num_states(), t.initial());
    for (i, e) in t.edges().iter().enumerate() {
        if core.edges[i] {
            b.add_edge(e.from, e.label.0, e.to);
        }
    }
    let mut terminals: Vec<usize> = (0..t.num_states()).filter(|&v| core.vertices[v]).collect();
    terminals.push(t.initial());
    b.set_terminals(terminals);
    trim(&b)
}

/// For each prefix `u` accepted by a complete-on-its-domain DFA `c0`, the
/// set of `(state, element)` pairs `(q, ū⁻¹·v̄)` over words `v` leading `c0`
/// to `q`, restricted to pairs that travel together inside the ball. It
/// recognizes every `C_{x,y}` at once: `u ∈ C_{x,y}` iff `x̄·ȳ⁻¹` occurs.
pub struct NeighborAutomaton {
    dfa: Dfa,
    elements: Vec<Vec<u32>>,
    ball: CayleyBall,
}

impl NeighborAutomaton {
    pub fn new(c0: &Dfa, o: &GroupOracle, radius: usize, state_cap: usize) -> Result<Self> {
        let al = o.alphabet().clone();
        let ball = o.ball(radius)?;
        let nb = ball.len();
        let nl = al.len();
        let moves = ball.move_table(o);
        // by_first[g][α] = moves reading α on the first tape; stay[g] = (ε, β) moves
        type Moves = Vec<(Option<Letter>, usize)>;
        let mut by_first: Vec<Vec<Moves>> = vec![vec![Vec::new(); nl]; nb];
        let mut stay: Vec<Vec<(Letter, usize)>> = vec![Vec::new(); nb];
        for (g, row) in moves.iter().enumerate() {
            for &((a, b), h) in row {
                match a {
                    Some(a) => by_first[g][a.index()].push((b, h)),
                    None => stay[g].push((b.expect("nonempty label"), h)),
                }
            }
        }
        let nq = c0.num_states();
        let code = |q: usize, h: usize| (q * nb + h) as u32;
        let mut mark = vec![false; nq * nb];
        let close = |set: &mut Vec<u32>, mark: &mut Vec<bool>| {
            let mut i = 0;
            while i < set.len() {
                let (q, g) = (set[i] as usize / nb, set[i] as usize % nb);
                for &(b, h) in &stay[g] {
                    if let Some(q2) = c0.next(q, b) {
                        let c = code(q2, h);
                        if !mark[c as usize] {
                            mark[c as usize] = true;
                            set.push(c);
                        }
                    }
                }
                i += 1;
            }
            for &c in set.iter() {
                mark[c as usize] = false;
            }
            set.sort_unstable();
        };
        let mut start = vec![code(c0.initial(), 0)];
        mark[start[0] as usize] = true;
        close(&mut start, &mut mark);
        let mut index: HashMap<(usize, Vec<u32>), usize> = HashMap::new();
        let mut keys: Vec<(usize, Vec<u32>)> = vec![(c0.initial(), start.clone())];
        index.insert((c0.initial(), start), 0);
        let mut trans: Vec<Vec<Option<usize>>> = Vec::new();
        let mut i = 0;
        while i < keys.len() {
            let mut row = vec![None; nl];
            for a in al.letters() {
                let Some(p2) = c0.next(keys[i].0, a) else { continue };
                let mut next: Vec<u32> = Vec::new();
                for &c in &keys[i].1 {
                    let (q, g) = (c as usize / nb, c as usize % nb);
                    for &(b, h) in &by_first[g][a.index()] {
                        let q2 = match b {
                            None => Some(q),
                            Some(b) => c0.next(q, b),
                        };
                        if let Some(q2) = q2 {
                            let c2 = code(q2, h);
                            if !mark[c2 as usize] {
                                mark[c2 as usize] = true;
                                next.push(c2);
                            }
                        }
                    }
                }
                close(&mut next, &mut mark);
                let key = (p2, next);
                let id = match index.get(&key) {
                    Some(&id) => id,
                    None => {
                        if keys.len() >= state_cap {
                            return Err(Error::StateCapExceeded {
                                what: "neighbor automaton",
                                cap: state_cap,
                            });
                        }
                        index.insert(key.clone(), keys.len());
                        keys.push(key);
                        keys.len() - 1
                    }
                };
                row[a.index()] = Some(id);
            }
            trans.push(row);
            i += 1;
        }
        let elements: Vec<Vec<u32>> = keys
            .iter()
            .map(|(_, set)| {
                let mut hs: Vec<u32> = set.iter().map(|&c| c % nb as u32).collect();
                hs.sort_unstable();
                hs.dedup();
                hs
            })
            .collect();
        let finals = vec![true; keys.len()];
        Ok(NeighborAutomaton {
            dfa: Dfa::new(al, trans, 0, finals),
            elements,
            ball,
        })
    }

    pub fn num_states(&self) -> usize {
        self.dfa.num_states()
    }

    pub fn ball(&self) -> &CayleyBall {
        &self.ball
    }

    fn contains(&self, s: usize, g: usize) -> bool {
        self.elements[s].binary_search(&(g as u32)).is_ok()
    }

    /// `C_{x,y}` for the element `x̄·ȳ⁻¹` at ball index `target`.
    pub fn c_xy(&self, target: usize) -> Dfa {
        let finals = (0..self.num_states()).map(|s| self.contains(s, target)).collect();
        self.dfa.with_finals(finals)
    }

    /// Prefixes none of whose neighbor elements is forbidden.
    pub fn avoiding(&self, forbidden: &[usize]) -> Dfa {
        let finals = (0..self.num_states())
            .map(|s| forbidden.iter().all(|&g| !self.contains(s, g)))
            .collect();
        self.dfa.with_finals(finals)
    }
}

/// `C_{x,y}` by the direct route: the Cayley automaton of radius `radius`
/// targeting `x·y⁻¹`, intersected with `c0 × c0`, first tape.
pub fn c_xy_direct(o: &GroupOracle, c0: &Nfa, x: &Word, y: &Word, radius: usize) -> Result<Nfa> {
    let target = x.concat(&invert_word(o.alphabet(), y));
    let tau = o.cayley_transducer(&target, radius)?;
    Ok(trim(&project(&intersect_rect(&tau, c0, c0)?, Tape::First)))
}

struct Sampled {
    members: Vec<Word>,
    upto_checked: usize,
    upto_violations: usize,
}

/// Accepting paths with at most `maxlen` letters, with the edge that produced
/// each letter of `u·v⁻¹`.
fn sample_paths(t: &Transducer, maxlen: usize, limit: usize) -> Vec<(Word, Vec<usize>)> {
    let out: Vec<Vec<usize>> = {
        let mut out = vec![Vec::new(); t.num_states()];
        for (i, e) in t.edges().iter().enumerate() {
            out[e.from].push(i);
        }
        out
    };
    let al = t.alphabet();
    let mut result = Vec::new();
    // (state, first-tape edges, second-tape edges)
    let mut stack: Vec<(usize, Vec<usize>, Vec<usize>, usize)> = vec![(t.initial(), Vec::new(), Vec::new(), 0)];
    while let Some((s, first, second, depth)) = stack.pop() {
        if result.len() >= limit {
            break;
        }
        if t.terminals().contains(&s) && !(first.is_empty() && second.is_empty()) {
            let edges = t.edges();
            let mut word: Vec<Letter> = first.iter().map(|&e| edges[e].label.0.expect("first")).collect();
            let mut producers = first.clone();
            for &e in second.iter().rev() {
                word.push(al.inverse(edges[e].label.1.expect("second")));
                producers.push(e);
            }
            result.push((Word(word), producers));
        }
        // (ε,ε) edges are acyclic after stripping, so depth bounds them
        if depth > maxlen + t.num_states() {
            continue;
        }
        for &e in &out[s] {
            let (a, b) = t.edges()[e].label;
            if first.len() + second.len() + a.is_some() as usize + b.is_some() as usize > maxlen {
                continue;
            }
            let mut f2 = first.clone();
            let mut s2 = second.clone();
            if a.is_some() {
                f2.push(e);
            }
            if b.is_some() {
                s2.push(e);
            }
            stack.push((t.edges()[e].to, f2, s2, depth + 1));
        }
    }
    result
}

fn sample_and_check(t: &Transducer, al: &Alphabet, core: &CoreSubgraph, sample_len: usize) -> Result<Sampled> {
    let closed = LinearLanguage::inverse_mode(t.clone());
    let members = enumerate_members(&closed, sample_len);
    for w in &members {
        if w.is_empty() {
            return Err(Error::EmptyWord);
        }
        if !al.is_freely_reduced(w) {
            return Err(Error::NotFreelyReduced(al.format_word(w)));
        }
    }
    if let SigSearch::Impossible(obs) = search_significant(al, &members)? {
        return Err(Error::NotSignificant(obs.describe(al)));
    }
    // the true significant letter is unknown; a path is consistent
    // when some admissible position was produced outside the core
    let windows: BTreeMap<&Word, Window> = members.iter().map(|w| (w, window(al, &members, w))).collect();
    let mut checked = 0;
    let mut violations = 0;
    for (w, producers) in sample_paths(t, sample_len, 20_000) {
        let Some(win) = windows.get(&w) else { continue };
        checked += 1;
        if !(1..=w.len()).any(|s| win.contains(s) && !core.edges[producers[s - 1]]) {
            violations += 1;
        }
    }
    Ok(Sampled {
        members,
        upto_checked: checked,
        upto_violations: violations,
    })
}

/// Builds a prefix-closed combing with uniqueness from a language of free
/// generators with significant letters.
///
/// The language is closed under inversion; `C₀` — prefixes read along the
/// core of the transducer — is extended by the shortlex-least suffix `x`
/// reaching each element. Suffix candidates are the shortlex-least geodesics
/// of the elements within twice the tail length, which are the only words
/// that can win the minimum, and the neighbor sets are tracked inside the
/// ball of radius `k + 4·tail`, where `k` is the empirical fellow-traveler
/// bound plus the margin. The result is verified on a ball before returning.
pub fn build_combing(l: &LinearLanguage, o: &GroupOracle, opts: &BuildOptions) -> Result<(Nfa, BuildReport)> {
    if l.transducer.alphabet() != o.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let al: Arc<Alphabet> = o.alphabet().clone();
    let l = l.to_inverse_mode();
    let closed = combine_linear(&l, &invert_linear(&l)?)?;
    let t = trim_t(&strip_epsilon_cycles(&trim_t(&closed.transducer)));
    if t.terminals().is_empty() {
        return Err(Error::NothingToConstruct);
    }
    let balanced = check_balanced_cycles(&t);
    if opts.central && !balanced {
        return Err(Error::UnbalancedCycle);
    }
    let big_k = t.num_states() + t.edges().len() + 1;
    let core = core_subgraph(&t);
    let tail = tail_length(&t, &core);
    let sampled = sample_and_check(&t, &al, &core, opts.sample_len)?;

    let c0 = minimize(&first_combing_prefixes(&t, &core));
    let ft_mode = if opts.central { FtMode::Sync } else { FtMode::Async };
    let k_report = ft_bound_of_combing(&c0.to_nfa(), o, ft_mode, opts.sample_len, opts.sample_len + 1)?;
    let k_empirical = k_report.bound.unwrap_or(opts.sample_len + 1);
    let k_used = k_empirical.max(opts.ft_bound_hint) + opts.margin;
    let radius = k_used + 4 * tail;

    let candidates = o.ball(2 * tail)?;
    let neighbors = NeighborAutomaton::new(&c0, o, radius, opts.state_cap)?;
    let ball = neighbors.ball();
    let xs = &candidates.words;
    let mut result = Nfa::empty(al.clone());
    let mut x_used = Vec::new();
    for (i, x) in xs.iter().enumerate() {
        // candidates come in shortlex order, so the smaller y are xs[..i]
        let forbidden: Vec<usize> = xs[..i]
            .iter()
            .map(|y| {
                let g = o.class_of(&x.concat(&invert_word(&al, y)));
                ball.index_of(&g).expect("within 4·tail of 1")
            })
            .collect();
        let cx = minimize_dfa(&neighbors.avoiding(&forbidden));
        if cx.num_states() == 1 && !cx.is_final(0) {
            continue;
        }
        x_used.push(x.clone());
        let cx_x = combine(CombineOp::Concat, &cx.to_nfa(), &Nfa::from_words(al.clone(), [x]))?;
        result = combine(CombineOp::Union, &result, &cx_x)?;
    }
    let result = trim(&minimize(&result).to_nfa());

    let verification = check_combing(&result, o, opts.verify_radius, opts.verify_maxlen)?;
    let ft_check = ft_bound_of_combing(&result, o, ft_mode, opts.verify_maxlen, 2 * opts.verify_maxlen + 2)?;
    let mut verification = verification;
    verification.ft_mode = Some(ft_mode);
    verification.ft_bound = ft_check.bound;
    let report = BuildReport {
        transducer_states: t.num_states(),
        transducer_edges: t.edges().len(),
        big_k,
        tail,
        core_states: core.vertex_count(),
        core_edges: core.edge_count(),
        sample_size: sampled.members.len(),
        upto_checked: sampled.upto_checked,
        upto_violations: sampled.upto_violations,
        c0_states: c0.num_states(),
        ft_mode,
        k_empirical,
        k_structural: 2 * big_k,
        k_used,
        radius,
        x_candidates: xs.len(),
        x_used,
        neighbor_states: neighbors.num_states(),
        result_states: result.num_states(),
        synchronized_shape: crate::transduce::has_synchronized_shape(&t),
        balanced,
        verification,
        ft_check,
    };
    Ok((result, report))
}
