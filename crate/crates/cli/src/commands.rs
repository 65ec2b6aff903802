use std::ops::RangeInclusive;

use lrs_core::applications::{
    boustrophedon, stirling_column, stirling_triangle, wythoff_array, WythoffVariant, WYTHOFF_LEAD_COLUMNS,
};
use lrs_core::closed_form::{agrees, general_closed_form};
use lrs_core::genfunc::genfunc_of;
use lrs_core::identity::{find_identity, named_identity_suite, sweep, Grid, IdentityVerdict, Suite};
use lrs_core::irs_algebra::{build_toeplitz, represent_by_irs, representation_weights, solve_toeplitz};
use lrs_core::rational::parse_rational_list;
use lrs_core::roots::characteristic_roots;
use lrs_core::{BilateralSequence, CoefficientSet, Rational, SequenceSpec};
use serde_json::{json, Map, Value};

use crate::error::CliError;
use crate::render::{self, aligned, csv, strings, words, Format};
use crate::spec_file::SpecFile;
use crate::{Cli, Command, SpecArgs};

pub struct Output {
    pub text: String,
    /// False when a verification found a counterexample.
    pub passed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, passed: true }
    }
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let f = cli.format;
    match &cli.command {
        Command::Eval { spec, index } => eval(&load(spec)?, index.range(10), f),
        Command::Irs { spec, count } => {
            let s = SequenceSpec::irs(load(spec)?.coefficients());
            eval(&s, 0..=*count as i64 - 1, f)
        }
        Command::Genfunc { spec, count } => genfunc(&load(spec)?, *count, f),
        Command::ClosedForm { spec, index, precision_bits, digits } => {
            closed_form(&load(spec)?, index.range(10), *precision_bits, *digits, f)
        }
        Command::Represent { spec, index } => represent(&load(spec)?, index.range(10), f),
        Command::Toeplitz { spec } => toeplitz(&load(spec)?, f),
        Command::Verify { spec, suite, m, n, r } => verify(spec, suite, [m, n, r], f),
        Command::Stirling { k, count, rows } => match k {
            Some(k) => stirling_col(*k, *count, f),
            None => stirling_tri(*rows, f),
        },
        Command::Wythoff { variant, rows, cols } => wythoff(variant, *rows, *cols, f),
        Command::Boustrophedon { values, spec, count } => {
            let a = match values {
                Some(v) => parse_rational_list(v)?,
                None => BilateralSequence::new(load(spec)?).terms_range(0, *count as i64 - 1)?,
            };
            transform(&a, f)
        }
    }
}

fn load(args: &SpecArgs) -> Result<SequenceSpec, CliError> {
    if let Some(path) = &args.spec {
        return SpecFile::read(path);
    }
    let Some(coeffs) = &args.coeffs else {
        return Err(CliError::Usage("a sequence is required: pass --coeffs or --spec".into()));
    };
    let cs = CoefficientSet::new(parse_rational_list(coeffs)?)?;
    match &args.initials {
        None => Ok(SequenceSpec::irs(&cs)),
        Some(a) => Ok(SequenceSpec::new(cs, parse_rational_list(a)?)?),
    }
}

/// JSON object that starts with the spec keys, so it can be read back by `--spec`.
fn with_spec(spec: &SequenceSpec) -> Map<String, Value> {
    match serde_json::to_value(SpecFile::from_spec(spec)) {
        Ok(Value::Object(m)) => m,
        _ => unreachable!("spec files serialize to objects"),
    }
}

fn eval(spec: &SequenceSpec, range: RangeInclusive<i64>, f: Format) -> Result<Output, CliError> {
    if range.is_empty() {
        return Err(lrs_core::Error::InvalidRange { lo: *range.start(), hi: *range.end() }.into());
    }
    let terms = BilateralSequence::new(spec.clone()).terms_range(*range.start(), *range.end())?;
    let text = match f {
        Format::Table => format!("{}\n", words(&terms)),
        Format::Csv => {
            let mut rows = vec![strings(&["n", "value"])];
            rows.extend(range.zip(&terms).map(|(n, v)| vec![n.to_string(), v.to_string()]));
            csv(&rows)
        }
        Format::Json => {
            let mut m = with_spec(spec);
            m.insert("from".into(), json!(range.start()));
            m.insert("terms".into(), json!(strings(&terms)));
            render::json(&Value::Object(m))
        }
    };
    Ok(Output::ok(text))
}

fn genfunc(spec: &SequenceSpec, count: Option<usize>, f: Format) -> Result<Output, CliError> {
    let gf = genfunc_of(spec);
    let series = count.map(|c| gf.expand(c));
    let text = match f {
        Format::Table => {
            let mut s = format!("{gf}\n");
            if let Some(v) = &series {
                s.push_str(&format!("{}\n", words(v)));
            }
            s
        }
        Format::Csv => {
            let (num, den) = (gf.numerator().coeffs(), gf.denominator().coeffs());
            let mut rows = vec![strings(&["power", "numerator", "denominator"])];
            for i in 0..num.len().max(den.len()) {
                let cell = |c: &[Rational]| c.get(i).map_or("0".to_string(), Rational::to_string);
                rows.push(vec![i.to_string(), cell(num), cell(den)]);
            }
            csv(&rows)
        }
        Format::Json => {
            let mut m = with_spec(spec);
            m.insert("numerator".into(), json!(strings(gf.numerator().coeffs())));
            m.insert("denominator".into(), json!(strings(gf.denominator().coeffs())));
            m.insert("display".into(), json!(gf.to_string()));
            if let Some(v) = &series {
                m.insert("series".into(), json!(strings(v)));
            }
            render::json(&Value::Object(m))
        }
    };
    Ok(Output::ok(text))
}

fn closed_form(
    spec: &SequenceSpec,
    range: RangeInclusive<i64>,
    bits: usize,
    digits: usize,
    f: Format,
) -> Result<Output, CliError> {
    let roots = characteristic_roots(spec.coefficients(), bits)?;
    let seq = BilateralSequence::new(spec.clone());
    let mut values = Vec::new();
    for n in range {
        let exact = seq.term(n)?;
        let approx = general_closed_form(spec, &roots, n);
        let ok = agrees(&approx, &exact, bits);
        values.push((n, approx, exact, ok));
    }
    let passed = values.iter().all(|v| v.3);
    let text = match f {
        Format::Table => {
            let mut rows = vec![strings(&["root", "value", "multiplicity"])];
            for (i, r) in roots.roots().iter().enumerate() {
                rows.push(vec![
                    (i + 1).to_string(),
                    render::complex(&r.alpha, digits),
                    r.multiplicity.to_string(),
                ]);
            }
            let mut s = aligned(&rows, None);
            s.push('\n');
            let mut rows = vec![strings(&["n", "closed form", "exact", "agrees"])];
            for (n, approx, exact, ok) in &values {
                let mark = if *ok { "yes" } else { "NO" };
                rows.push(vec![
                    n.to_string(),
                    render::complex(approx, digits),
                    exact.to_string(),
                    mark.into(),
                ]);
            }
            s.push_str(&aligned(&rows, None));
            s
        }
        Format::Csv => {
            let mut rows = vec![strings(&["n", "re", "im", "exact", "agrees"])];
            for (n, approx, exact, ok) in &values {
                rows.push(vec![
                    n.to_string(),
                    approx.re.to_decimal(digits),
                    approx.im.to_decimal(digits),
                    exact.to_string(),
                    ok.to_string(),
                ]);
            }
            csv(&rows)
        }
        Format::Json => {
            let mut m = with_spec(spec);
            m.insert("precision_bits".into(), json!(bits));
            let rs: Vec<Value> = roots
                .roots()
                .iter()
                .map(|r| json!({"re": r.alpha.re.to_decimal(digits), "im": r.alpha.im.to_decimal(digits), "mult": r.multiplicity}))
                .collect();
            m.insert("roots".into(), json!(rs));
            let res: Vec<String> = roots.residuals().iter().map(|r| r.to_decimal(digits)).collect();
            m.insert("residuals".into(), json!(res));
            let vs: Vec<Value> = values
                .iter()
                .map(|(n, a, e, ok)| json!({"n": n, "re": a.re.to_decimal(digits), "im": a.im.to_decimal(digits), "exact": e.to_string(), "agrees": ok}))
                .collect();
            m.insert("values".into(), json!(vs));
            render::json(&Value::Object(m))
        }
    };
    Ok(Output { text, passed })
}

fn represent(spec: &SequenceSpec, range: RangeInclusive<i64>, f: Format) -> Result<Output, CliError> {
    let r = spec.order();
    let lead = spec.initials()[r - 1].clone();
    let weights = representation_weights(spec);
    let mut formula = format!("a_n = ({lead})*F~_n");
    for (j, w) in weights.iter().enumerate() {
        formula.push_str(&format!(" + ({w})*F~_(n-{})", j + 1));
    }
    let seq = BilateralSequence::new(spec.clone());
    let mut values = Vec::new();
    for n in range {
        let v = represent_by_irs(spec, n)?;
        let direct = seq.term(n)?;
        values.push((n, v, direct));
    }
    let passed = values.iter().all(|(_, v, d)| v == d);
    let text = match f {
        Format::Table => {
            let mut rows = vec![strings(&["n", "from IRS", "direct"])];
            rows.extend(values.iter().map(|(n, v, d)| vec![n.to_string(), v.to_string(), d.to_string()]));
            format!("{formula}\n\n{}", aligned(&rows, None))
        }
        Format::Csv => {
            let mut rows = vec![strings(&["n", "from_irs", "direct"])];
            rows.extend(values.iter().map(|(n, v, d)| vec![n.to_string(), v.to_string(), d.to_string()]));
            csv(&rows)
        }
        Format::Json => {
            let mut m = with_spec(spec);
            m.insert("lead".into(), json!(lead.to_string()));
            m.insert("weights".into(), json!(strings(&weights)));
            let vs: Vec<Value> = values
                .iter()
                .map(|(n, v, d)| json!({"n": n, "value": v.to_string(), "direct": d.to_string()}))
                .collect();
            m.insert("values".into(), json!(vs));
            render::json(&Value::Object(m))
        }
    };
    Ok(Output { text, passed })
}

fn toeplitz(spec: &SequenceSpec, f: Format) -> Result<Output, CliError> {
    let sys = build_toeplitz(spec);
    let rep = solve_toeplitz(&sys)?;
    let text = match f {
        Format::Table => format!("{}\n", rep.pretty()),
        Format::Csv => {
            let mut rows = vec![strings(&["delta", "c"])];
            rows.extend(rep.terms.iter().map(|t| vec![t.delta.to_string(), t.c.to_string()]));
            csv(&rows)
        }
        Format::Json => {
            let mut m = with_spec(spec);
            let matrix: Vec<Vec<String>> =
                (0..sys.matrix.rows()).map(|i| strings(sys.matrix.row(i))).collect();
            m.insert("parity".into(), json!(sys.parity.to_string()));
            m.insert("unknown_shifts".into(), json!(sys.unknown_shifts));
            m.insert("matrix".into(), json!(matrix));
            m.insert("rhs".into(), json!(strings(&sys.rhs)));
            m.insert("determinant".into(), json!(sys.matrix.determinant()?.to_string()));
            let terms: Vec<Value> =
                rep.terms.iter().map(|t| json!({"delta": t.delta, "c": t.c.to_string()})).collect();
            m.insert("terms".into(), json!(terms));
            m.insert("display".into(), json!(rep.to_string()));
            render::json(&Value::Object(m))
        }
    };
    Ok(Output::ok(text))
}

fn verify(
    spec: &SpecArgs,
    suite: &str,
    [m, n, r]: [&Option<RangeInclusive<i64>>; 3],
    f: Format,
) -> Result<Output, CliError> {
    let verdict = if let Some(name) = suite.strip_prefix("named:") {
        let entry = find_identity(name)?;
        let range = n.clone().unwrap_or(entry.min_index..=30);
        named_identity_suite(name, *range.start(), *range.end())?
    } else {
        let s = Suite::parse(suite).ok_or_else(|| {
            CliError::Usage(format!(
                "unknown suite {suite:?}; expected addition, nonlinear, negative, small-m, transfer, congruence or named:<name>"
            ))
        })?;
        let (m_default, r_lo) = match s {
            Suite::Transfer => (1..=5, 1),
            Suite::Congruence => (2..=6, 0),
            _ => (1..=5, -10),
        };
        let grid = Grid::new(
            m.clone().unwrap_or(m_default),
            n.clone().unwrap_or(0..=6),
            r.clone().unwrap_or(r_lo..=10),
        );
        sweep(s, &load(spec)?, &grid)?
    };
    let text = match f {
        Format::Table => format!("{verdict}\n"),
        Format::Csv => {
            let ce = verdict.counterexample.as_ref();
            let rows = vec![
                strings(&["identity", "ranges", "passed", "cases", "counterexample"]),
                vec![
                    verdict.identity.clone(),
                    verdict.ranges.clone(),
                    verdict.passed.to_string(),
                    verdict.cases.to_string(),
                    ce.map(ToString::to_string).unwrap_or_default(),
                ],
            ];
            csv(&rows)
        }
        Format::Json => render::json(&verdict_json(&verdict)),
    };
    Ok(Output { text, passed: verdict.passed })
}

fn verdict_json(v: &IdentityVerdict) -> Value {
    let mut m = Map::new();
    m.insert("identity".into(), json!(v.identity));
    m.insert("ranges".into(), json!(v.ranges));
    m.insert("passed".into(), json!(v.passed));
    m.insert("cases".into(), json!(v.cases));
    if let Some(c) = &v.counterexample {
        let params: Map<String, Value> = c.parameters.iter().map(|(k, x)| (k.clone(), json!(x))).collect();
        m.insert(
            "counterexample".into(),
            json!({"parameters": params, "detail": c.detail, "lhs": c.lhs.to_string(), "rhs": c.rhs.to_string()}),
        );
    }
    Value::Object(m)
}

fn stirling_col(k: usize, count: usize, f: Format) -> Result<Output, CliError> {
    let col = stirling_column(k, count)?;
    let text = match f {
        Format::Table => format!("{}\n", words(&col)),
        Format::Csv => {
            let mut rows = vec![vec!["n".to_string(), format!("S(n+1,{k})")]];
            rows.extend(col.iter().enumerate().map(|(n, v)| vec![n.to_string(), v.to_string()]));
            csv(&rows)
        }
        Format::Json => {
            let cs = lrs_core::applications::stirling_coefficients(k)?;
            let spec = SequenceSpec::irs(&cs);
            let mut m = with_spec(&spec);
            m.insert("k".into(), json!(k));
            m.insert("terms".into(), json!(strings(&col)));
            render::json(&Value::Object(m))
        }
    };
    Ok(Output::ok(text))
}

fn stirling_tri(rows: usize, f: Format) -> Result<Output, CliError> {
    if rows == 0 {
        return Err(CliError::Usage("--rows must be at least 1".into()));
    }
    let tri = stirling_triangle(rows - 1);
    let text = match f {
        Format::Table => {
            let mut table =
                vec![std::iter::once("n\\k".to_string()).chain((0..rows).map(|k| k.to_string())).collect()];
            for (n, row) in tri.iter().enumerate() {
                table.push(std::iter::once(n.to_string()).chain(strings(row)).collect());
            }
            let body = aligned(&table, Some(1));
            let mut lines = body.lines();
            let header = lines.next().unwrap_or_default().to_string();
            let bar = header.find('|').unwrap_or(0);
            let mut s = format!("{header}\n{}+{}\n", "-".repeat(bar), "-".repeat(header.len() - bar - 1));
            for l in lines {
                s.push_str(l);
                s.push('\n');
            }
            s
        }
        Format::Csv => csv(&tri.iter().map(|r| strings(r)).collect::<Vec<_>>()),
        Format::Json => {
            let t: Vec<Vec<String>> = tri.iter().map(|r| strings(r)).collect();
            render::json(&json!({"triangle": t}))
        }
    };
    Ok(Output::ok(text))
}

fn wythoff(variant: &str, rows: usize, cols: usize, f: Format) -> Result<Output, CliError> {
    let v = WythoffVariant::parse(variant)
        .ok_or_else(|| CliError::Usage(format!("unknown variant {variant:?}; expected fibonacci or pell")))?;
    let arr = wythoff_array(v, rows, cols)?;
    let table: Vec<Vec<String>> = arr.entries.iter().map(|r| strings(r)).collect();
    let text = match f {
        Format::Table => aligned(&table, Some(WYTHOFF_LEAD_COLUMNS).filter(|&c| c < cols)),
        Format::Csv => csv(&table),
        Format::Json => {
            let rows: Vec<Value> = arr
                .rows
                .iter()
                .zip(&table)
                .map(|(spec, entries)| {
                    let mut m = with_spec(spec);
                    m.insert("entries".into(), json!(entries));
                    Value::Object(m)
                })
                .collect();
            render::json(&json!({"variant": v.name(), "rows": rows}))
        }
    };
    Ok(Output::ok(text))
}

fn transform(a: &[Rational], f: Format) -> Result<Output, CliError> {
    let (b, tri) = boustrophedon(a)?;
    let text = match f {
        Format::Table => {
            let rows: Vec<Vec<String>> = tri.rows.iter().map(|r| strings(r)).collect();
            format!("{}\nb = {}\n", aligned(&rows, None), words(&b))
        }
        Format::Csv => {
            let mut rows = vec![strings(&["n", "a", "b"])];
            rows.extend((0..a.len()).map(|n| vec![n.to_string(), a[n].to_string(), b[n].to_string()]));
            csv(&rows)
        }
        Format::Json => {
            let t: Vec<Vec<String>> = tri.rows.iter().map(|r| strings(r)).collect();
            render::json(&json!({"a": strings(a), "b": strings(&b), "triangle": t}))
        }
    };
    Ok(Output::ok(text))
}
