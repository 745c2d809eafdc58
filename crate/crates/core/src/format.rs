//! Plain-text formats for automata, transducers, oracles and word lists.
//!
//! Every file starts with the alphabet:
//!
//! ```text
//! alphabet a A b B
//! inverse a A
//! inverse b B
//! ```
//!
//! followed by one body. Automata:
//!
//! ```text
//! nfa                # or: transducer, optionally preceded by `linear inverse|reversal`
//! states 3
//! initial 0
//! final 2
//! edge 0 a 1
//! edge 1 - 2         # `-` is ε; transducer edges carry two labels: `edge 0 a b 1`
//! ```
//!
//! Oracles: `oracle free`, `oracle abelian` with `rank d` and `weight a 1 0`
//! lines, or `oracle finite` with `elements n`, `letter a 3` lines and
//! `table` followed by `n` rows. Word lists: `words` followed by
//! `word ab` or `word ab @2` (significant position) lines.

use std::collections::VecDeque;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::GroupOracle;
use crate::linear::{LinearLanguage, Mode};
use crate::regular::Nfa;
use crate::transduce::{PairLabel, Transducer};
use crate::words::{Alphabet, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Automaton {
    Nfa(Nfa),
    Transducer { transducer: Transducer, mode: Option<Mode> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordList {
    pub alphabet: Arc<Alphabet>,
    pub entries: Vec<(Word, Option<usize>)>,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<&'a str>,
}

struct Reader<'a> {
    lines: Vec<Line<'a>>,
    pos: usize,
    last_line: usize,
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

impl<'a> Reader<'a> {
    fn new(text: &'a str) -> Self {
        let mut lines = Vec::new();
        let mut last_line = 0;
        for (i, raw) in text.lines().enumerate() {
            last_line = i + 1;
            let content = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = content.split_whitespace().collect();
            if !tokens.is_empty() {
                lines.push(Line { number: i + 1, tokens });
            }
        }
        Reader {
            lines,
            pos: 0,
            last_line,
        }
    }

    fn peek_keyword(&self) -> Option<&'a str> {
        self.lines.get(self.pos).map(|l| l.tokens[0])
    }

    fn eof_line(&self) -> usize {
        self.last_line.max(1)
    }

    /// The next line, which must start with `keyword`; returns its arguments.
    fn expect(&mut self, keyword: &str) -> Result<(usize, Vec<&'a str>)> {
        match self.lines.get(self.pos) {
            Some(l) if l.tokens[0] == keyword => {
                self.pos += 1;
                Ok((l.number, l.tokens[1..].to_vec()))
            }
            Some(l) => Err(err(l.number, format!("expected `{keyword}`, found `{}`", l.tokens[0]))),
            None => Err(err(
                self.eof_line(),
                format!("expected `{keyword}`, found end of input"),
            )),
        }
    }

    fn take_if(&mut self, keyword: &str) -> Option<(usize, Vec<&'a str>)> {
        if self.peek_keyword() == Some(keyword) {
            self.expect(keyword).ok()
        } else {
            None
        }
    }

    fn finish(&self) -> Result<()> {
        match self.lines.get(self.pos) {
            Some(l) => Err(err(l.number, format!("unexpected `{}`", l.tokens[0]))),
            None => Ok(()),
        }
    }
}

fn number(line: usize, token: &str) -> Result<usize> {
    token
        .parse()
        .map_err(|_| err(line, format!("expected a number, found `{token}`")))
}

fn one_number(line: usize, args: &[&str]) -> Result<usize> {
    match args {
        [x] => number(line, x),
        _ => Err(err(line, "expected exactly one number")),
    }
}

fn letter(alphabet: &Alphabet, line: usize, token: &str) -> Result<Letter> {
    alphabet
        .letter(token)
        .map_err(|_| err(line, format!("unknown symbol `{token}`")))
}

fn label(alphabet: &Alphabet, line: usize, token: &str) -> Result<Option<Letter>> {
    if token == "-" {
        Ok(None)
    } else {
        letter(alphabet, line, token).map(Some)
    }
}

fn state(line: usize, token: &str, states: usize) -> Result<usize> {
    let s = number(line, token)?;
    if s >= states {
        return Err(err(line, format!("state {s} out of range for {states} states")));
    }
    Ok(s)
}

fn read_alphabet(r: &mut Reader) -> Result<Arc<Alphabet>> {
    let (line, symbols) = r.expect("alphabet")?;
    let mut pairs = Vec::new();
    while let Some((l, args)) = r.take_if("inverse") {
        match args.as_slice() {
            [x, y] => pairs.push((x.to_string(), y.to_string())),
            _ => return Err(err(l, "`inverse` takes two symbols")),
        }
    }
    let symbols: Vec<String> = symbols.iter().map(|s| s.to_string()).collect();
    Alphabet::new(&symbols, &pairs)
        .map(Arc::new)
        .map_err(|e| err(line, e.to_string()))
}

/// Parses an automaton or transducer file.
pub fn parse_automaton(text: &str) -> Result<Automaton> {
    let mut r = Reader::new(text);
    let alphabet = read_alphabet(&mut r)?;
    let mode = match r.take_if("linear") {
        Some((l, args)) => Some(match args.as_slice() {
            ["inverse"] => Mode::Inverse,
            ["reversal"] => Mode::Reversal,
            _ => return Err(err(l, "`linear` takes `inverse` or `reversal`")),
        }),
        None => None,
    };
    let two_tapes = match r.peek_keyword() {
        Some("nfa") if mode.is_none() => false,
        Some("transducer") => true,
        _ => {
            let line = r.lines.get(r.pos).map_or(r.eof_line(), |l| l.number);
            let want = if mode.is_some() {
                "`transducer`"
            } else {
                "`nfa` or `transducer`"
            };
            return Err(err(line, format!("expected {want}")));
        }
    };
    r.pos += 1;
    let (l, args) = r.expect("states")?;
    let states = one_number(l, &args)?;
    if states == 0 {
        return Err(err(l, "an automaton needs at least one state"));
    }
    let (l, args) = r.expect("initial")?;
    let initial = match args.as_slice() {
        [x] => state(l, x, states)?,
        _ => return Err(err(l, "expected exactly one state")),
    };
    let (l, args) = r.expect("final")?;
    let finals = args.iter().map(|t| state(l, t, states)).collect::<Result<Vec<_>>>()?;
    let mut edges = Vec::new();
    while let Some((l, args)) = r.take_if("edge") {
        let want = if two_tapes { 4 } else { 3 };
        if args.len() != want {
            return Err(err(l, format!("`edge` takes {want} fields")));
        }
        let from = state(l, args[0], states)?;
        let to = state(l, args[want - 1], states)?;
        let a = label(&alphabet, l, args[1])?;
        let b = if two_tapes { label(&alphabet, l, args[2])? } else { None };
        edges.push((from, a, b, to));
    }
    r.finish()?;
    if two_tapes {
        let mut t = Transducer::new(alphabet, states, initial);
        for (f, a, b, to) in edges {
            t.add_edge(f, (a, b), to);
        }
        t.set_terminals(finals);
        t.normalize();
        Ok(Automaton::Transducer { transducer: t, mode })
    } else {
        let mut n = Nfa::new(alphabet, states, initial);
        for (f, a, _, to) in edges {
            n.add_edge(f, a, to);
        }
        n.set_terminals(finals);
        n.normalize();
        Ok(Automaton::Nfa(n))
    }
}

pub fn parse_nfa(text: &str) -> Result<Nfa> {
    match parse_automaton(text)? {
        Automaton::Nfa(n) => Ok(n),
        Automaton::Transducer { .. } => Err(err(1, "expected an nfa, found a transducer")),
    }
}

pub fn parse_transducer(text: &str) -> Result<(Transducer, Option<Mode>)> {
    match parse_automaton(text)? {
        Automaton::Transducer { transducer, mode } => Ok((transducer, mode)),
        Automaton::Nfa(_) => Err(err(1, "expected a transducer, found an nfa")),
    }
}

/// A transducer file read as a linear language; inverse mode unless stated.
pub fn parse_linear(text: &str) -> Result<LinearLanguage> {
    let (t, mode) = parse_transducer(text)?;
    Ok(LinearLanguage::new(t, mode.unwrap_or(Mode::Inverse)))
}

/// Breadth-first state order from the initial state, following edges in
/// label order; unreachable states keep their relative order at the end.
fn canonical_order(states: usize, initial: usize, edges: &[(usize, (usize, usize), usize)]) -> Vec<usize> {
    let mut out: Vec<Vec<((usize, usize), usize)>> = vec![Vec::new(); states];
    for &(f, l, t) in edges {
        out[f].push((l, t));
    }
    for row in &mut out {
        row.sort();
    }
    let mut rank = vec![usize::MAX; states];
    let mut next = 0;
    let mut queue = VecDeque::new();
    rank[initial] = 0;
    next += 1;
    queue.push_back(initial);
    while let Some(s) = queue.pop_front() {
        for &(_, t) in &out[s] {
            if rank[t] == usize::MAX {
                rank[t] = next;
                next += 1;
                queue.push_back(t);
            }
        }
    }
    for r in rank.iter_mut() {
        if *r == usize::MAX {
            *r = next;
            next += 1;
        }
    }
    rank
}

fn label_key(x: Option<Letter>) -> usize {
    x.map_or(0, |x| x.index() + 1)
}

fn write_header(out: &mut String, alphabet: &Alphabet) {
    let _ = writeln!(out, "alphabet {}", alphabet.symbols().join(" "));
    for x in alphabet.letters() {
        let y = alphabet.inverse(x);
        if x < y {
            let _ = writeln!(out, "inverse {} {}", alphabet.symbol(x), alphabet.symbol(y));
        }
    }
}

fn sym(alphabet: &Alphabet, x: Option<Letter>) -> &str {
    x.map_or("-", |x| alphabet.symbol(x))
}

struct Body {
    states: usize,
    initial: usize,
    terminals: Vec<usize>,
    edges: Vec<(usize, PairLabel, usize)>,
}

fn write_body(out: &mut String, alphabet: &Alphabet, body: Body, two_tapes: bool) {
    let keyed: Vec<(usize, (usize, usize), usize)> = body
        .edges
        .iter()
        .map(|&(f, (a, b), t)| (f, (label_key(a), label_key(b)), t))
        .collect();
    let rank = canonical_order(body.states, body.initial, &keyed);
    let mut edges: Vec<(usize, (usize, usize), usize, PairLabel)> = body
        .edges
        .iter()
        .map(|&(f, l, t)| (rank[f], (label_key(l.0), label_key(l.1)), rank[t], l))
        .collect();
    edges.sort();
    edges.dedup();
    let mut finals: Vec<usize> = body.terminals.iter().map(|&s| rank[s]).collect();
    finals.sort();
    let _ = writeln!(out, "states {}", body.states);
    let _ = writeln!(out, "initial 0");
    let finals: Vec<String> = finals.iter().map(|s| s.to_string()).collect();
    if finals.is_empty() {
        let _ = writeln!(out, "final");
    } else {
        let _ = writeln!(out, "final {}", finals.join(" "));
    }
    for (f, _, t, (a, b)) in edges {
        if two_tapes {
            let _ = writeln!(out, "edge {f} {} {} {t}", sym(alphabet, a), sym(alphabet, b));
        } else {
            let _ = writeln!(out, "edge {f} {} {t}", sym(alphabet, a));
        }
    }
}

/// Writes an automaton with canonically numbered states.
pub fn write_nfa(a: &Nfa) -> String {
    let mut out = String::new();
    write_header(&mut out, a.alphabet());
    out.push_str("nfa\n");
    let body = Body {
        states: a.num_states(),
        initial: a.initial(),
        terminals: a.terminals().iter().copied().collect(),
        edges: a.edges().iter().map(|e| (e.from, (e.label, None), e.to)).collect(),
    };
    write_body(&mut out, a.alphabet(), body, false);
    out
}

pub fn write_transducer(t: &Transducer, mode: Option<Mode>) -> String {
    let mut out = String::new();
    write_header(&mut out, t.alphabet());
    if let Some(mode) = mode {
        let _ = writeln!(out, "linear {}", mode.name());
    }
    out.push_str("transducer\n");
    let body = Body {
        states: t.num_states(),
        initial: t.initial(),
        terminals: t.terminals().iter().copied().collect(),
        edges: t.edges().iter().map(|e| (e.from, e.label, e.to)).collect(),
    };
    write_body(&mut out, t.alphabet(), body, true);
    out
}

pub fn write_linear(l: &LinearLanguage) -> String {
    write_transducer(&l.transducer, Some(l.mode))
}

fn integers(line: usize, args: &[&str]) -> Result<Vec<i64>> {
    args.iter()
        .map(|t| {
            t.parse()
                .map_err(|_| err(line, format!("expected an integer, found `{t}`")))
        })
        .collect()
}

pub fn parse_oracle(text: &str) -> Result<GroupOracle> {
    let mut r = Reader::new(text);
    let alphabet = read_alphabet(&mut r)?;
    let (line, args) = r.expect("oracle")?;
    let oracle = match args.as_slice() {
        ["free"] => GroupOracle::free(alphabet),
        ["abelian"] => {
            let (l, args) = r.expect("rank")?;
            let rank = one_number(l, &args)?;
            let mut weights = Vec::new();
            while let Some((l, args)) = r.take_if("weight") {
                let Some((x, rest)) = args.split_first() else {
                    return Err(err(l, "`weight` takes a symbol and its vector"));
                };
                let x = letter(&alphabet, l, x)?;
                let v = integers(l, rest)?;
                if v.len() != rank {
                    return Err(err(l, format!("expected {rank} entries, found {}", v.len())));
                }
                weights.push((x, v));
            }
            GroupOracle::abelian(alphabet, rank, &weights).map_err(|e| err(line, e.to_string()))?
        }
        ["finite"] => {
            let (l, args) = r.expect("elements")?;
            let n = one_number(l, &args)?;
            let mut letters = Vec::new();
            while let Some((l, args)) = r.take_if("letter") {
                match args.as_slice() {
                    [x, g] => letters.push((letter(&alphabet, l, x)?, state(l, g, n)?)),
                    _ => return Err(err(l, "`letter` takes a symbol and an element")),
                }
            }
            r.expect("table")?;
            let mut table = Vec::new();
            for _ in 0..n {
                let row = match r.lines.get(r.pos) {
                    Some(row) => row,
                    None => return Err(err(r.eof_line(), format!("table needs {n} rows"))),
                };
                r.pos += 1;
                if row.tokens.len() != n {
                    return Err(err(row.number, format!("table rows need {n} entries")));
                }
                table.push(
                    row.tokens
                        .iter()
                        .map(|t| state(row.number, t, n))
                        .collect::<Result<Vec<_>>>()?,
                );
            }
            GroupOracle::finite(alphabet, table, &letters).map_err(|e| err(line, e.to_string()))?
        }
        _ => return Err(err(line, "`oracle` takes `free`, `abelian` or `finite`")),
    };
    r.finish()?;
    Ok(oracle)
}

pub fn parse_word_list(text: &str) -> Result<WordList> {
    let mut r = Reader::new(text);
    let alphabet = read_alphabet(&mut r)?;
    r.expect("words")?;
    let mut entries = Vec::new();
    while let Some((l, args)) = r.take_if("word") {
        let (sig, parts) = match args.split_last() {
            Some((last, rest)) if last.starts_with('@') => (Some(number(l, &last[1..])?), rest),
            _ => (None, args.as_slice()),
        };
        let mut w = Word::empty();
        for p in parts {
            let part = alphabet.parse_word(p).map_err(|e| err(l, e.to_string()))?;
            w.0.extend(part.0);
        }
        entries.push((w, sig));
    }
    r.finish()?;
    Ok(WordList { alphabet, entries })
}

pub fn write_word_list(list: &WordList) -> String {
    let mut out = String::new();
    write_header(&mut out, &list.alphabet);
    out.push_str("words\n");
    let single = list.alphabet.symbols().iter().all(|s| s.chars().count() == 1);
    for (w, sig) in &list.entries {
        let text = if w.is_empty() {
            "-".to_string()
        } else if single {
            list.alphabet.format_word(w)
        } else {
            w.iter().map(|&x| list.alphabet.symbol(x)).collect::<Vec<_>>().join(" ")
        };
        match sig {
            Some(s) => {
                let _ = writeln!(out, "word {text} @{s}");
            }
            None => {
                let _ = writeln!(out, "word {text}");
            }
        }
    }
    out
}

/// `key=value` lines, in order.
pub fn key_values<K: AsRef<str>, V: AsRef<str>>(pairs: &[(K, V)]) -> String {
    let mut out = String::new();
    for (k, v) in pairs {
        let _ = writeln!(out, "{}={}", k.as_ref(), v.as_ref());
    }
    out
}
