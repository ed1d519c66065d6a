use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::groebner::{GroebnerBasis, QuotientDimension};
use crate::invariants::{
    build_action_ideal, extended_graph_basis, extract_generating_invariants, graph_section_basis,
    rewrite_by_replacement, AlgebraicGroupAction, CrossSection, GeneratingInvariantSet,
};
use crate::poly::render::rational_to_string;
use crate::poly::{BigRational, BlockKind, MonomialOrder, OrderKind, VarRole, VarTable};
use crate::signature::{
    curve_signature, form_signature, sample_signature, samples_to_csv, signatures_equal,
    ParametricCurve, SignatureCurve,
};

use super::{
    builtin_spec, parse_order, parse_polynomial, parse_rational, ActionSpecDocument,
    OrderDescriptor,
};

#[derive(Parser, Debug)]
#[command(
    name = "ratinv",
    version,
    about = "Rational invariants and differential signatures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Monomial order, e.g. `lex(b>a>y>x>Y>X)`.
    #[arg(long, global = true)]
    order: Option<String>,
    /// Write the result to a file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Action, graph and graph-section bases and generating invariants.
    Invariants {
        /// Spec file or built-in name.
        spec: String,
        /// Cross-section generators, overriding the spec's `section:`.
        #[arg(long, allow_hyphen_values = true)]
        section: Option<String>,
    },
    /// Signature of a curve or of a binary form.
    Signature {
        #[command(subcommand)]
        kind: SignatureKind,
    },
    /// Whether two saved signatures have the same closure.
    Compare { first: PathBuf, second: PathBuf },
    /// An invariant in terms of the replacement invariants.
    Rewrite {
        spec: String,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        section: Option<String>,
    },
    /// Points of a saved signature at the given parameter values.
    Sample {
        signature: PathBuf,
        /// Comma-separated rationals.
        #[arg(long, allow_hyphen_values = true)]
        t: String,
    },
}

#[derive(Subcommand, Debug)]
enum SignatureKind {
    /// Planar curve `(x(t), y(t))` under an action with a `pair:`.
    Curve {
        spec: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(long, default_value = "t")]
        param: String,
    },
    /// Binary form of degree `m` with inhomogeneous counterpart `phi(p)`.
    Form {
        #[arg(long)]
        degree: usize,
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
        #[arg(long, default_value = "p")]
        param: String,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Csv,
    JsonLines,
}

/// One line of output: a scalar or a set of values.
#[derive(Debug, Clone)]
struct Record {
    key: &'static str,
    values: Vec<String>,
    set: bool,
}

fn scalar(key: &'static str, v: impl ToString) -> Record {
    Record {
        key,
        values: vec![v.to_string()],
        set: false,
    }
}

fn set<T: ToString>(key: &'static str, vs: impl IntoIterator<Item = T>) -> Record {
    Record {
        key,
        values: vs.into_iter().map(|v| v.to_string()).collect(),
        set: true,
    }
}

enum Output {
    Records(Vec<Record>),
    Samples(Vec<crate::signature::SamplePoint>),
}

/// Runs the command line `argv` (program name first). Output goes to
/// `out` unless `--output` is given, diagnostics to `err`. Returns the
/// exit status: 0 on success, 2 on user errors, 3 on refusals.
pub fn run_command<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    2
                }
            };
        }
    };
    let mut warnings = Vec::new();
    let result = dispatch(&cli, &mut warnings).and_then(|o| {
        let text = render(&o, cli.format, &mut warnings)?;
        match &cli.output {
            Some(path) => std::fs::write(path, text)
                .map_err(|e| Error::Io(format!("{}: {e}", path.display()))),
            None => out.write_all(text.as_bytes()).map_err(Error::from),
        }
    });
    for w in &warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_refusal() {
                3
            } else {
                2
            }
        }
    }
}

fn dispatch(cli: &Cli, warnings: &mut Vec<String>) -> Result<Output> {
    match &cli.command {
        Command::Invariants { spec, section } => {
            let doc = load_spec(spec)?;
            invariants(&doc, cli.order.as_deref(), section.as_deref()).map(Output::Records)
        }
        Command::Signature { kind } => {
            let s = match kind {
                SignatureKind::Curve { spec, x, y, param } => {
                    let doc = load_spec(spec)?;
                    let pair = doc.classifying_pair()?.ok_or_else(|| {
                        Error::Usage(format!("{spec} declares no classifying pair (`pair:`)"))
                    })?;
                    let t = param_table(param)?;
                    let curve =
                        ParametricCurve::new(parse_rational(x, &t)?, parse_rational(y, &t)?)?;
                    curve_signature(&curve, &pair)?
                }
                SignatureKind::Form { degree, phi, param } => {
                    let t = param_table(param)?;
                    form_signature(*degree, &parse_polynomial(phi, &t)?)?
                }
            };
            Ok(Output::Records(signature_records(&s)))
        }
        Command::Compare { first, second } => {
            let a = load_signature(first)?;
            let b = load_signature(second)?;
            let show = |s: &SignatureCurve| match (&s.implicit, s.point()) {
                (Some(p), _) => p.to_string(),
                (None, Some((u, v))) => {
                    format!("({}, {})", rational_to_string(&u), rational_to_string(&v))
                }
                (None, None) => "none".into(),
            };
            Ok(Output::Records(vec![
                scalar("equal", signatures_equal(&a, &b)),
                scalar("first", show(&a)),
                scalar("second", show(&b)),
            ]))
        }
        Command::Rewrite { spec, f, section } => {
            let doc = load_spec(spec)?;
            let act = doc.action()?;
            let cs = section_of(&doc, &act, section.as_deref())?.ok_or_else(|| {
                Error::Usage("rewrite needs a cross-section (`section:` or --section)".into())
            })?;
            let order = target_order(&doc, cli.order.as_deref())?;
            let gens = section_invariants(&act, &cs, order.as_ref())?;
            let f = parse_rational(f, &doc.source_table()?)?;
            let r = rewrite_by_replacement(&gens, &f)?;
            Ok(Output::Records(vec![
                scalar("rewrite", &r.expression),
                set("where", r.tags.iter().map(|(n, v)| format!("{n} = {v}"))),
            ]))
        }
        Command::Sample { signature, t } => {
            let s = load_signature(signature)?;
            let ts = parse_rationals(t)?;
            let samples = sample_signature(&s, &ts);
            if samples.iter().all(|p| p.value.is_none()) && !samples.is_empty() {
                warnings.push("every requested parameter is a pole".into());
            }
            Ok(Output::Samples(samples))
        }
    }
}

fn param_table(name: &str) -> Result<crate::poly::Table> {
    VarTable::with_role([name], VarRole::CurveParam).map_err(|e| Error::Usage(e.to_string()))
}

fn load_spec(arg: &str) -> Result<ActionSpecDocument> {
    let path = Path::new(arg);
    let text = if path.is_file() {
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{arg}: {e}")))?
    } else if let Some(t) = builtin_spec(arg) {
        t.to_string()
    } else {
        return Err(Error::Io(format!("{arg}: no such file or built-in spec")));
    };
    ActionSpecDocument::parse(&text)
}

fn section_of(
    doc: &ActionSpecDocument,
    act: &AlgebraicGroupAction,
    flag: Option<&str>,
) -> Result<Option<CrossSection>> {
    match flag {
        None => doc.cross_section(act),
        Some(text) => {
            let t = doc.target_table()?;
            let gens = text
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| parse_polynomial(s, &t))
                .collect::<Result<Vec<_>>>()?;
            if gens.is_empty() {
                return Err(Error::Usage(
                    "--section needs at least one generator".into(),
                ));
            }
            Ok(Some(CrossSection::new(act, gens)?))
        }
    }
}

/// The order descriptor in force: `--order` wins over the spec's `order:`.
fn descriptor(doc: &ActionSpecDocument, flag: Option<&str>) -> Result<Option<OrderDescriptor>> {
    match flag {
        Some(text) => {
            let d = parse_order(text)?;
            super::order_scope(&d, doc)?;
            Ok(Some(d))
        }
        None => Ok(doc.order.clone()),
    }
}

/// The descriptor restricted to `names`, keeping block structure.
fn restrict(d: &OrderDescriptor, names: &[String]) -> Option<OrderDescriptor> {
    let blocks: Vec<(BlockKind, Vec<String>)> = d
        .blocks
        .iter()
        .map(|(k, b)| {
            (
                *k,
                b.iter()
                    .filter(|n| names.contains(n))
                    .cloned()
                    .collect::<Vec<_>>(),
            )
        })
        .filter(|(_, b)| !b.is_empty())
        .collect();
    let kind = match blocks.as_slice() {
        [] => return None,
        [(BlockKind::Lex, _)] => OrderKind::Lex,
        [(BlockKind::DegRevLex, _)] => OrderKind::DegRevLex,
        _ => OrderKind::Block,
    };
    Some(OrderDescriptor { kind, blocks })
}

/// Order on the targets for `O^e` and `I^e`; a full order is restricted.
fn target_order(doc: &ActionSpecDocument, flag: Option<&str>) -> Result<Option<MonomialOrder>> {
    let Some(d) = descriptor(doc, flag)? else {
        return Ok(None);
    };
    let t = doc.target_table()?;
    match restrict(&d, t.names()) {
        Some(r) => Ok(Some(r.resolve(&t)?)),
        None => Ok(None),
    }
}

fn section_invariants(
    act: &AlgebraicGroupAction,
    cs: &CrossSection,
    order: Option<&MonomialOrder>,
) -> Result<GeneratingInvariantSet> {
    let b = graph_section_basis(act, cs, order)?;
    if b.quotient_dimension() == QuotientDimension::Infinite {
        return Err(Error::NotACrossSection);
    }
    Ok(extract_generating_invariants(&b.basis))
}

fn invariants(
    doc: &ActionSpecDocument,
    order_flag: Option<&str>,
    section_flag: Option<&str>,
) -> Result<Vec<Record>> {
    let act = doc.action()?;
    let desc = descriptor(doc, order_flag)?;
    let order = target_order(doc, order_flag)?;
    let cs = section_of(doc, &act, section_flag)?;
    let a = build_action_ideal(&act)?;
    let mut out = vec![set("action-ideal", a.ideal.generators())];

    let targets = doc.target_table()?;
    if let Some(d) = desc.as_ref().filter(|d| d.names().count() > targets.len()) {
        let mut full = d.clone();
        if let Some(mu) = a.mu {
            full.kind = OrderKind::Block;
            full.blocks.insert(
                0,
                (BlockKind::DegRevLex, vec![a.table().name(mu).to_string()]),
            );
        }
        let gb = GroebnerBasis::of_polynomials(
            a.table(),
            full.resolve(a.table())?,
            a.ideal.generators(),
        )?;
        out.push(scalar("action-order", &full));
        out.push(set("action-basis", gb.render()));
    }

    // O is only computed without a cross-section; it can be far harder
    // than I^e (GL2 on quartics).
    let basis = match &cs {
        None => {
            let graph = extended_graph_basis(&act, order.as_ref())?;
            out.push(set("graph-ideal", &graph.elimination));
            out.push(set("graph-extension", graph.render()));
            graph
        }
        Some(cs) => {
            let b = graph_section_basis(&act, cs, order.as_ref())?;
            out.push(set("cross-section", cs.generators()));
            out.push(set("graph-section-basis", b.render()));
            match b.quotient_dimension() {
                QuotientDimension::Finite { dimension, .. } => {
                    out.push(scalar("degree", dimension))
                }
                QuotientDimension::Infinite => out.push(scalar("degree", "infinite")),
            }
            b
        }
    };
    let gens = extract_generating_invariants(&basis.basis);
    out.push(set("generators", &gens.invariants));
    if gens.is_rational_section {
        let names = targets.names();
        let mut repl = Vec::new();
        for g in basis.basis.elements() {
            let v = g
                .leading_monomial()
                .and_then(|m| m.pure_power_of())
                .expect("linear basis");
            let r = g
                .terms()
                .get(1)
                .map_or_else(|| "0".to_string(), |(_, c)| c.neg().to_string());
            repl.push(format!("{} = {r}", names[v]));
        }
        out.push(set("replacement", repl));
    }
    out.push(set("non-generic-locus", &basis.non_generic_locus));
    Ok(out)
}

fn signature_records(s: &SignatureCurve) -> Vec<Record> {
    let mut r = vec![
        scalar("param", s.param_table().name(0)),
        scalar("sigma1", &s.sigma1),
        scalar("sigma2", &s.sigma2),
    ];
    match (&s.implicit, s.point()) {
        (Some(p), _) => r.push(scalar("implicit", p)),
        (None, Some((u, v))) => r.push(set(
            "point",
            [rational_to_string(&u), rational_to_string(&v)],
        )),
        (None, None) => {}
    }
    r.push(scalar("degenerate", s.degenerate));
    r
}

/// Reads a signature saved by `signature` in text or json-lines form.
fn load_signature(path: &Path) -> Result<SignatureCurve> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let mut fields: Vec<(String, String, usize)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line.starts_with('{') {
            let v: serde_json::Value = serde_json::from_str(line).map_err(|e| Error::Syntax {
                line: line_no,
                column: e.column(),
                message: e.to_string(),
            })?;
            if let (Some(k), Some(val)) = (v["key"].as_str(), v["value"].as_str()) {
                fields.push((k.to_string(), val.to_string(), line_no));
            }
        } else if let Some((k, v)) = line.split_once(':') {
            fields.push((k.trim().to_string(), v.trim().to_string(), line_no));
        } else {
            return Err(Error::Syntax {
                line: line_no,
                column: 1,
                message: "expected `key: value`".into(),
            });
        }
    }
    let get = |k: &str| fields.iter().find(|(n, _, _)| n == k);
    let missing = |k: &str| Error::Spec {
        line: 0,
        message: format!("{}: missing `{k}:`", path.display()),
    };
    let param = get("param").map_or("t", |(_, v, _)| v.as_str());
    let t = param_table(param)?;
    let parse = |k: &str| -> Result<_> {
        let (_, v, line) = get(k).ok_or_else(|| missing(k))?;
        super::parse_rational_at(v, &t, *line, k.len() + 3)
    };
    SignatureCurve::from_parametrization(parse("sigma1")?, parse("sigma2")?)
}

fn parse_rationals(list: &str) -> Result<Vec<BigRational>> {
    let mut out = Vec::new();
    let mut col = 1;
    for item in list.split(',') {
        let s = item.trim();
        let q = BigRational::from_str(s).map_err(|_| Error::Syntax {
            line: 1,
            column: col + item.len() - item.trim_start().len(),
            message: format!("`{s}` is not a rational number"),
        })?;
        out.push(q);
        col += item.len() + 1;
    }
    Ok(out)
}

fn render(o: &Output, format: Format, warnings: &mut Vec<String>) -> Result<String> {
    match o {
        Output::Records(rs) => Ok(match format {
            Format::Text => rs
                .iter()
                .map(|r| {
                    if r.set {
                        format!("{}: {{{}}}\n", r.key, r.values.join(", "))
                    } else {
                        format!("{}: {}\n", r.key, r.values[0])
                    }
                })
                .collect(),
            Format::JsonLines => rs
                .iter()
                .map(|r| {
                    let v = if r.set {
                        serde_json::json!({ "key": r.key, "values": r.values })
                    } else {
                        serde_json::json!({ "key": r.key, "value": r.values[0] })
                    };
                    format!("{v}\n")
                })
                .collect(),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                let io = |e: csv::Error| Error::Io(e.to_string());
                w.write_record(["key", "value"]).map_err(io)?;
                for r in rs {
                    for v in &r.values {
                        w.write_record([r.key, v.as_str()]).map_err(io)?;
                    }
                }
                let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
                String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))?
            }
        }),
        Output::Samples(samples) => {
            let (csv, warn) = samples_to_csv(samples);
            warnings.extend(warn);
            Ok(match format {
                Format::Text | Format::Csv => csv,
                Format::JsonLines => samples
                    .iter()
                    .filter_map(|s| {
                        let (a, b) = s.value.as_ref()?;
                        let v = serde_json::json!({
                            "t": rational_to_string(&s.t),
                            "sigma1": rational_to_string(a),
                            "sigma2": rational_to_string(b),
                        });
                        Some(format!("{v}\n"))
                    })
                    .collect(),
            })
        }
    }
}
