use std::fs;
use std::path::Path;

use combkit::format::{
    parse_automaton, parse_linear, parse_nfa, parse_oracle, parse_transducer, parse_word_list, write_linear, write_nfa,
    write_transducer, Automaton,
};
use combkit::linear::{enumerate_members, Mode};
use combkit::regular::{self, distinguishing_word, enumerate, CombineOp};
use combkit::structures::{
    build_combing, check_central, check_combing, check_significant, extract_generators, ft_bound_of_combing,
    search_significant, BuildOptions, SigSearch, SigVerdict, SigWord,
};
use combkit::transduce::{
    self, combine_t, enumerate_pairs_total, has_synchronized_shape, identity_of, intersect_rect, project,
    synchronized_bound, trim_t,
};
use combkit::{Error, FtMode, GroupOracle, LinearLanguage, Tape, Word};

use crate::{AutOp, Cli, Command, ModeArg, TapeArg};

/// Either a checked failure (exit 1) or bad input (exit 2).
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotSignificant(_) | Error::UnbalancedCycle | Error::NothingToConstruct => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

type Outcome = Result<bool, Failure>;

pub fn run(cli: &Cli) -> u8 {
    match dispatch(cli) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn with_path<T>(path: &Path, r: combkit::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    })
}

fn load(path: &Path) -> Result<Automaton, Failure> {
    with_path(path, parse_automaton(&read(path)?))
}

fn load_nfa(path: &Path) -> Result<regular::Nfa, Failure> {
    with_path(path, parse_nfa(&read(path)?))
}

fn load_transducer(path: &Path) -> Result<(combkit::Transducer, Option<Mode>), Failure> {
    with_path(path, parse_transducer(&read(path)?))
}

fn load_oracle(path: &Path) -> Result<GroupOracle, Failure> {
    with_path(path, parse_oracle(&read(path)?))
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.out {
        Some(path) => fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_automaton(cli: &Cli, a: &Automaton) -> Result<(), Failure> {
    let text = match a {
        Automaton::Nfa(n) => write_nfa(n),
        Automaton::Transducer { transducer, mode } => write_transducer(transducer, *mode),
    };
    emit(cli, &text)
}

fn dispatch(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Aut { op } => aut(cli, op),
        Command::Enum { file, maxlen } => {
            match load(file)? {
                Automaton::Nfa(n) => {
                    for w in enumerate(&n, *maxlen) {
                        println!("{}", n.alphabet().format_word(&w));
                    }
                }
                Automaton::Transducer {
                    transducer,
                    mode: Some(mode),
                } => {
                    let l = LinearLanguage::new(transducer, mode);
                    for w in enumerate_members(&l, *maxlen) {
                        println!("{}", l.transducer.alphabet().format_word(&w));
                    }
                }
                Automaton::Transducer { transducer, mode: None } => {
                    let al = transducer.alphabet().clone();
                    for (u, v) in enumerate_pairs_total(&transducer, *maxlen) {
                        println!("({}, {})", al.format_word(&u), al.format_word(&v));
                    }
                }
            }
            Ok(true)
        }
        Command::CheckCombing {
            file,
            oracle,
            radius,
            maxlen,
        } => {
            let c = load_nfa(file)?;
            let o = load_oracle(oracle)?;
            let r = check_combing(&c, &o, *radius, *maxlen)?;
            print!("{r}");
            for v in r.violations(c.alphabet()) {
                println!("witness: {v}");
            }
            println!("result={}", if r.passed() { "pass" } else { "fail" });
            Ok(r.passed())
        }
        Command::SigCheck { file, maxlen, search } => sig_check(file, *maxlen, *search),
        Command::CentralCheck { file, k, maxlen } => {
            let (al, sigs) = sig_words(file, *maxlen)?;
            let r = check_central(&sigs, *k);
            print!("{r}");
            if let Some(w) = &r.worst {
                println!("worst={}", w.display(&al));
            }
            match r.pass {
                Some(pass) => {
                    println!("result={}", if pass { "pass" } else { "fail" });
                    Ok(pass)
                }
                None => {
                    println!("o_central=inconclusive");
                    Ok(true)
                }
            }
        }
        Command::Extract { file, oracle, ft } => {
            let c = load_nfa(file)?;
            let o = load_oracle(oracle)?;
            let l = extract_generators(&c, &o, *ft)?;
            emit(cli, &write_linear(&l))?;
            Ok(true)
        }
        Command::Build {
            file,
            oracle,
            central,
            margin,
            hint,
            sample_len,
            verify_radius,
            verify_maxlen,
        } => {
            let l = with_path(file, parse_linear(&read(file)?))?;
            let o = load_oracle(oracle)?;
            let opts = BuildOptions {
                ft_bound_hint: *hint,
                central: *central,
                margin: *margin,
                sample_len: *sample_len,
                verify_radius: *verify_radius,
                verify_maxlen: *verify_maxlen,
                ..BuildOptions::default()
            };
            let (c, report) = build_combing(&l, &o, &opts)?;
            let al = o.alphabet();
            // the report goes to stderr when the automaton goes to stdout
            let text = combkit::format::key_values(&report.key_values(al));
            let passed = report.verification.passed();
            let witnesses = report.verification.violations(al);
            if cli.out.is_some() {
                print!("{text}");
                for v in &witnesses {
                    println!("witness: {v}");
                }
            } else {
                eprint!("{text}");
                for v in &witnesses {
                    eprintln!("witness: {v}");
                }
            }
            emit(cli, &write_nfa(&c))?;
            Ok(passed)
        }
        Command::FtBound {
            file,
            oracle,
            mode,
            maxlen,
            cap,
        } => {
            let c = load_nfa(file)?;
            let o = load_oracle(oracle)?;
            let mode = match mode {
                ModeArg::Sync => FtMode::Sync,
                ModeArg::Async => FtMode::Async,
            };
            let cap = cap.unwrap_or(2 * maxlen + 2);
            let r = ft_bound_of_combing(&c, &o, mode, *maxlen, cap)?;
            let al = o.alphabet();
            println!("mode={}", mode.name());
            println!("pairs={}", r.pairs);
            if let Some((u, v)) = &r.worst {
                println!("worst=({}, {})", al.format_word(u), al.format_word(v));
            }
            match r.bound {
                Some(k) => {
                    println!("bound={k}");
                    Ok(true)
                }
                None => {
                    println!("bound=exceeded cap {cap}");
                    Ok(false)
                }
            }
        }
    }
}

fn aut(cli: &Cli, op: &AutOp) -> Outcome {
    match op {
        AutOp::Union { a, b } | AutOp::Concat { a, b } => {
            let how = if matches!(op, AutOp::Union { .. }) {
                CombineOp::Union
            } else {
                CombineOp::Concat
            };
            let out = match (load(a)?, load(b)?) {
                (Automaton::Nfa(x), Automaton::Nfa(y)) => Automaton::Nfa(regular::combine(how, &x, &y)?),
                (
                    Automaton::Transducer {
                        transducer: x,
                        mode: m1,
                    },
                    Automaton::Transducer {
                        transducer: y,
                        mode: m2,
                    },
                ) => {
                    if m1 != m2 {
                        return Err(Error::ModeMismatch.into());
                    }
                    Automaton::Transducer {
                        transducer: combine_t(how, &x, &y)?,
                        mode: m1,
                    }
                }
                _ => return Err(usage("operands must both be nfas or both be transducers")),
            };
            emit_automaton(cli, &out)?;
        }
        AutOp::Reverse { a } => emit(cli, &write_nfa(&regular::reverse(&load_nfa(a)?)))?,
        AutOp::Split { a } => {
            let n = load_nfa(a)?;
            let parts = regular::split_decomposition(&n);
            match &cli.out {
                Some(dir) => {
                    fs::create_dir_all(dir).map_err(|e| usage(format!("{}: {e}", dir.display())))?;
                    for (p, (x, y)) in parts.iter().enumerate() {
                        for (name, aut) in [(format!("x{p}.nfa"), x), (format!("y{p}.nfa"), y)] {
                            let path = dir.join(name);
                            fs::write(&path, write_nfa(aut)).map_err(|e| usage(format!("{}: {e}", path.display())))?;
                        }
                    }
                    println!("states={}", parts.len());
                }
                None => {
                    for (p, (x, y)) in parts.iter().enumerate() {
                        println!("# x{p}");
                        print!("{}", write_nfa(x));
                        println!("# y{p}");
                        print!("{}", write_nfa(y));
                    }
                }
            }
        }
        AutOp::Trim { a } => {
            let out = match load(a)? {
                Automaton::Nfa(n) => Automaton::Nfa(regular::trim(&n)),
                Automaton::Transducer { transducer, mode } => Automaton::Transducer {
                    transducer: trim_t(&transducer),
                    mode,
                },
            };
            emit_automaton(cli, &out)?;
        }
        AutOp::Equiv { a, b } => {
            let (x, y) = (load_nfa(a)?, load_nfa(b)?);
            return match distinguishing_word(&x, &y)? {
                None => {
                    println!("equivalent=true");
                    Ok(true)
                }
                Some(w) => {
                    println!("equivalent=false");
                    let side = if regular::accepts(&x, &w) { "first" } else { "second" };
                    println!("witness={} (accepted only by the {side})", x.alphabet().format_word(&w));
                    Ok(false)
                }
            };
        }
        AutOp::Project { t, tape } => {
            let (t, _) = load_transducer(t)?;
            let tape = match tape {
                TapeArg::First => Tape::First,
                TapeArg::Second => Tape::Second,
            };
            emit(cli, &write_nfa(&project(&t, tape)))?;
        }
        AutOp::IntersectRect { t, r, s } => {
            let (tt, mode) = load_transducer(t)?;
            let out = intersect_rect(&tt, &load_nfa(r)?, &load_nfa(s)?)?;
            emit(cli, &write_transducer(&out, mode))?;
        }
        AutOp::Identity { r } => emit(cli, &write_transducer(&identity_of(&load_nfa(r)?), None))?,
        AutOp::SyncBound { t } => {
            let (t, _) = load_transducer(t)?;
            println!(
                "synchronized_shape={}",
                has_synchronized_shape(&transduce::strip_epsilon_cycles(&trim_t(&t)))
            );
            return match synchronized_bound(&t) {
                Some(k) => {
                    println!("bound={k}");
                    Ok(true)
                }
                None => {
                    println!("bound=unbounded");
                    Ok(false)
                }
            };
        }
    }
    Ok(true)
}

/// Sample words with significant positions: from a word list (given or
/// searched) or from the members of a linear language (searched).
fn sig_words(file: &Path, maxlen: usize) -> Result<(std::sync::Arc<combkit::Alphabet>, Vec<SigWord>), Failure> {
    let (al, words, given) = sample(file, maxlen)?;
    if let Some(given) = given {
        let sigs = words
            .into_iter()
            .zip(given)
            .map(|(w, s)| SigWord::new(&al, w, s))
            .collect::<combkit::Result<Vec<_>>>()?;
        return Ok((al, sigs));
    }
    match search_significant(&al, &words)? {
        SigSearch::Found(sigs) => Ok((al, sigs)),
        SigSearch::Impossible(obs) => Err(Error::NotSignificant(obs.describe(&al)).into()),
    }
}

type Sample = (std::sync::Arc<combkit::Alphabet>, Vec<Word>, Option<Vec<usize>>);

fn sample(file: &Path, maxlen: usize) -> Result<Sample, Failure> {
    let text = read(file)?;
    let first_body = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty() && !l.starts_with("alphabet") && !l.starts_with("inverse"))
        .unwrap_or("");
    if first_body.starts_with("words") {
        let list = with_path(file, parse_word_list(&text))?;
        let given: Option<Vec<usize>> = list.entries.iter().map(|(_, s)| *s).collect();
        let words = list.entries.into_iter().map(|(w, _)| w).collect();
        Ok((list.alphabet, words, given))
    } else {
        let l = with_path(file, parse_linear(&text))?;
        let al = l.transducer.alphabet().clone();
        Ok((al, enumerate_members(&l, maxlen), None))
    }
}

fn sig_check(file: &Path, maxlen: usize, search: bool) -> Outcome {
    let (al, words, given) = sample(file, maxlen)?;
    match given.filter(|_| !search) {
        Some(given) => {
            let sigs = words
                .into_iter()
                .zip(given)
                .map(|(w, s)| SigWord::new(&al, w, s))
                .collect::<combkit::Result<Vec<_>>>()?;
            match check_significant(&al, &sigs, true)? {
                SigVerdict::Pass { products } => {
                    println!("products={products}");
                    println!("result=pass");
                    Ok(true)
                }
                SigVerdict::Violation(v) => {
                    println!("witness: {}", v.describe(&al));
                    println!("result=fail");
                    Ok(false)
                }
            }
        }
        None => match search_significant(&al, &words)? {
            SigSearch::Found(sigs) => {
                for s in &sigs {
                    println!("{} @{}", s.display(&al), s.sig());
                }
                println!("result=pass");
                Ok(true)
            }
            SigSearch::Impossible(obs) => {
                println!("witness: {}", obs.describe(&al));
                println!("result=fail");
                Ok(false)
            }
        },
    }
}
