//! The `knit` command line, as a library so that it can be driven from
//! tests with an argument vector.

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use knit::colored::{colored_invariant, framing_factor, ColorLabel};
use knit::diagram::{closure_plat, closure_trace, LinkDiagram};
use knit::invariance::invariance_suite;
use knit::jones::jones_polynomial;
use knit::qsim::approx_jones;
use knit::{normal_form, words_equal, BraidWord, Error};

/// Outcome of one invocation.
#[derive(Clone, Debug, PartialEq)]
pub struct CommandResult {
    /// 0 on success, 1 domain error, 2 parse or usage error, 3 resource limit
    pub exit_code: i32,
    pub payload: Value,
    pub diagnostics: Vec<String>,
    /// human-readable rendering of the payload
    pub text: String,
}

#[derive(Parser, Debug)]
#[command(name = "knit", version, about = "Braid words, link diagrams and quantum link invariants")]
struct Cli {
    /// Print the JSON payload instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for the library's parallel sections.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Braid {
    /// Braid word such as "s1 s2^-1 s1^3".
    word: String,
    /// Braid index (number of strands); inferred from the word if omitted.
    #[arg(short = 'n', long = "strands")]
    n: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Closure {
    Trace,
    Plat,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Normalize {
    Regular,
    Ambient,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse a braid word and report its basic data.
    Parse(Braid),
    /// Garside normal form.
    Nf(Braid),
    /// Decide whether two words are the same braid.
    Eq {
        a: String,
        b: String,
        #[arg(short = 'n', long = "strands")]
        n: Option<usize>,
    },
    /// Crossings, components and writhe of a closure.
    ClosureInfo {
        #[command(flatten)]
        braid: Braid,
        #[arg(long, value_enum, default_value = "trace")]
        closure: Closure,
    },
    /// Exact Jones polynomial of a closure.
    Jones {
        #[command(flatten)]
        braid: Braid,
        #[arg(long, value_enum, default_value = "trace")]
        closure: Closure,
        /// Also evaluate at t = exp(2πi/R).
        #[arg(long = "at-root", value_name = "R")]
        at_root: Option<u32>,
    },
    /// Coloured invariant of a plat closure.
    Colored {
        #[command(flatten)]
        braid: Braid,
        /// Twice the spin of each component, e.g. "1,1,2".
        #[arg(long)]
        colors: String,
        #[arg(long, short = 'r')]
        root: u32,
        #[arg(long, value_enum, default_value = "regular")]
        normalize: Normalize,
    },
    /// Simulated Hadamard-test estimate of the Jones polynomial of a plat
    /// closure.
    Approx {
        #[command(flatten)]
        braid: Braid,
        #[arg(long, short = 'r')]
        root: u32,
        #[arg(long, default_value_t = 0.1)]
        delta: f64,
        #[arg(long, default_value_t = 0.75)]
        confidence: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Randomized Markov and Reidemeister invariance checks.
    InvarianceTest {
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

struct Output {
    payload: Value,
    text: String,
    diagnostics: Vec<String>,
    exit_code: i32,
}

impl Output {
    fn ok(payload: Value, text: String) -> Self {
        Self { payload, text, diagnostics: Vec::new(), exit_code: 0 }
    }
}

pub fn exit_code_for(e: &Error) -> i32 {
    if e.is_parse_error() {
        2
    } else if e.is_resource_limit() {
        3
    } else {
        1
    }
}

/// Parses `argv` (program name first) and runs the subcommand.
pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let payload = if code == 0 { Value::Null } else { json!({ "error": e.kind().to_string() }) };
            return CommandResult { exit_code: code, payload, diagnostics: Vec::new(), text };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads.max(1)).build() {
        Ok(p) => p,
        Err(e) => return failure(3, format!("cannot start {} threads: {e}", cli.threads)),
    };
    let json_mode = cli.json;
    match pool.install(|| dispatch(&cli.command)) {
        Ok(out) => CommandResult {
            exit_code: out.exit_code,
            text: if json_mode { pretty(&out.payload) } else { out.text },
            payload: out.payload,
            diagnostics: out.diagnostics,
        },
        Err(e) => {
            let mut f = failure(exit_code_for(&e), e.to_string());
            if json_mode {
                f.text = pretty(&f.payload);
            }
            f
        }
    }
}

fn failure(code: i32, msg: String) -> CommandResult {
    CommandResult {
        exit_code: code,
        payload: json!({ "error": msg }),
        diagnostics: Vec::new(),
        text: format!("error: {msg}"),
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values print")
}

/// Smallest index holding every generator of the word; plat closures
/// round up to an even index.
fn braid(b: &Braid, even: bool, diagnostics: &mut Vec<String>) -> knit::Result<BraidWord> {
    if let Some(n) = b.n {
        return BraidWord::parse(&b.word, n);
    }
    let loose = BraidWord::parse(&b.word, usize::MAX)?;
    let top = loose.letters().iter().map(|l| l.generator).max().unwrap_or(1);
    let mut n = top + 1;
    if even && n % 2 == 1 {
        n += 1;
    }
    diagnostics.push(format!("braid index inferred as {n}"));
    BraidWord::new(n, loose.letters().to_vec())
}

fn close(w: &BraidWord, c: Closure) -> knit::Result<LinkDiagram> {
    match c {
        Closure::Trace => Ok(closure_trace(w)),
        Closure::Plat => closure_plat(w),
    }
}

fn closure_name(c: Closure) -> &'static str {
    match c {
        Closure::Trace => "trace",
        Closure::Plat => "plat",
    }
}

fn signed_letters(w: &BraidWord) -> Vec<i64> {
    w.letters().iter().map(|l| l.generator as i64 * l.sign()).collect()
}

fn complex_text(re: f64, im: f64) -> String {
    if im < 0.0 {
        format!("{re:.12} - {:.12}i", -im)
    } else {
        format!("{re:.12} + {im:.12}i")
    }
}

fn dispatch(cmd: &Command) -> knit::Result<Output> {
    let mut diag = Vec::new();
    let mut out = match cmd {
        Command::Parse(b) => {
            let w = braid(b, false, &mut diag)?;
            let perm = w.underlying_permutation();
            let payload = json!({
                "word": w.to_string(),
                "index": w.index(),
                "length": w.len(),
                "letters": signed_letters(&w),
                "exponent_sum": w.exponent_sum(),
                "permutation": perm.images(),
            });
            let text = format!(
                "{w}\nindex {}, length {}, exponent sum {}, permutation {:?}",
                w.index(),
                w.len(),
                w.exponent_sum(),
                perm.images()
            );
            Output::ok(payload, text)
        }
        Command::Nf(b) => {
            let w = braid(b, false, &mut diag)?;
            let nf = normal_form(&w);
            let factors: Vec<&[usize]> = nf.factors.iter().map(|p| p.images()).collect();
            let word = nf.to_word();
            let payload = json!({
                "index": nf.index,
                "infimum": nf.infimum,
                "factors": factors,
                "canonical_length": nf.canonical_length(),
                "word": word.to_string(),
                "trivial": nf.is_identity(),
            });
            let mut text = format!("Δ^{} with {} factor(s)", nf.infimum, nf.factors.len());
            for f in &factors {
                text.push_str(&format!("\n  {f:?}"));
            }
            Output::ok(payload, text)
        }
        Command::Eq { a, b, n } => {
            let (mut x, mut y) = (
                braid(&Braid { word: a.clone(), n: *n }, false, &mut diag)?,
                braid(&Braid { word: b.clone(), n: *n }, false, &mut diag)?,
            );
            let m = x.index().max(y.index());
            x = x.embed(m)?;
            y = y.embed(m)?;
            let equal = words_equal(&x, &y)?;
            Output::ok(json!({ "equal": equal, "index": m }), if equal { "equal" } else { "different" }.into())
        }
        Command::ClosureInfo { braid: b, closure } => {
            let w = braid(b, *closure == Closure::Plat, &mut diag)?;
            let d = close(&w, *closure)?;
            let components = d.component_count()?;
            let payload = json!({
                "closure": closure_name(*closure),
                "index": w.index(),
                "crossings": d.crossing_count(),
                "components": components,
                "writhe": d.writhe(),
                "free_loops": d.free_loops(),
                "pd": d.to_string(),
            });
            let text = format!(
                "{} closure: {} crossings, {} component(s), writhe {}\n{d}",
                closure_name(*closure),
                d.crossing_count(),
                components,
                d.writhe()
            );
            Output::ok(payload, text)
        }
        Command::Jones { braid: b, closure, at_root } => {
            let w = braid(b, *closure == Closure::Plat, &mut diag)?;
            let d = close(&w, *closure)?;
            let v = jones_polynomial(&d)?;
            let mut payload = json!({
                "closure": closure_name(*closure),
                "writhe": d.writhe(),
                "variable": "t",
                "polynomial": v.display_in("t"),
                "terms": v.to_json_terms(),
            });
            let mut text = format!("V(t) = {}", v.display_in("t"));
            if let Some(r) = at_root {
                let z = v.evaluate_at_root(*r)?;
                payload["r"] = json!(r);
                payload["value_re"] = json!(z.re);
                payload["value_im"] = json!(z.im);
                text.push_str(&format!("\nV(exp(2πi/{r})) = {}", complex_text(z.re, z.im)));
            }
            Output::ok(payload, text)
        }
        Command::Colored { braid: b, colors, root, normalize } => {
            let w = braid(b, true, &mut diag)?;
            let colors = ColorLabel::parse_list(colors)?;
            let mut z = colored_invariant(&w, &colors, *root)?;
            if *normalize == Normalize::Ambient {
                z *= framing_factor(&w, &colors, *root)?;
            }
            let name = match normalize {
                Normalize::Regular => "regular",
                Normalize::Ambient => "ambient",
            };
            let labels: Vec<String> = colors.iter().map(|c| c.to_string()).collect();
            let payload = json!({
                "colors": colors.iter().map(|c| c.twice_j).collect::<Vec<_>>(),
                "r": root,
                "normalize": name,
                "value_re": z.re,
                "value_im": z.im,
            });
            let text = format!("J(spins {}; r = {root}, {name}) = {}", labels.join(", "), complex_text(z.re, z.im));
            Output::ok(payload, text)
        }
        Command::Approx { braid: b, root, delta, confidence, seed } => {
            let w = braid(b, true, &mut diag)?;
            let e = approx_jones(&w, *root, *delta, *confidence, *seed)?;
            if e.tractable {
                diag.push(format!("r = {root} is a classically tractable root"));
            }
            let mut text = format!(
                "Z = {}  ({} samples per quadrature, {} controlled steps per circuit)",
                complex_text(e.z_re, e.z_im),
                e.samples,
                e.steps
            );
            if let (Some(x), Some(err)) = (e.exact(), e.error()) {
                text.push_str(&format!("\nexact {}, error {err:.3e}", complex_text(x.re, x.im)));
            }
            Output::ok(e.to_json(), text)
        }
        Command::InvarianceTest { trials, seed } => {
            let report = invariance_suite(*trials, *seed)?;
            let mut text = String::new();
            for c in &report.checks {
                let mark = if c.all_passed() { "pass" } else { "FAIL" };
                text.push_str(&format!("{mark} {:<22} {}/{}\n", c.name, c.passed, c.trials));
                for f in &c.failures {
                    text.push_str(&format!("     {f}\n"));
                }
            }
            let mut out = Output::ok(serde_json::to_value(&report).expect("report serializes"), text);
            if !report.all_passed() {
                out.exit_code = 1;
            }
            out
        }
    };
    out.diagnostics.append(&mut diag);
    Ok(out)
}
