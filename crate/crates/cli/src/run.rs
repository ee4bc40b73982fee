use std::io::Write;

use serde::Serialize;
use serde_json::json;

use tenfold::invariants::{dispatch, InvariantError, InvariantValue, Witnesses};
use tenfold::ktable::{
    class_metadata, generated_periodic_table, kq_sphere, kq_torus, kr_sphere, kr_torus, table_self_check, KIndex,
};
use tenfold::models::{sample_grid, ModelParams, SampledBloch};
use tenfold::symmetry::{classify, zoo_symmetries, AZClass, Classification, Sign, SymmetryError, SymmetryOp};

use crate::args::{Command, Format, ModelConfig, ModelSource, RunConfig, Space, SweepRange};
use crate::format::{align, csv, fmt_float, round12};
use crate::{is_nonconvergent, CliError};

/// Rendered output of a command and its exit code; `diagnostics` go to stderr.
#[derive(Clone, Debug, Default)]
pub struct Outcome {
    pub body: String,
    pub diagnostics: Vec<String>,
    pub code: i32,
}

/// Runs `cfg`, writing the body to `--out` or `stdout` and diagnostics to
/// `stderr`; returns the process exit code.
pub fn execute(cfg: &RunConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let outcome = match run(cfg) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return e.exit_code();
        }
    };
    for d in &outcome.diagnostics {
        let _ = writeln!(stderr, "{d}");
    }
    let written = match &cfg.out {
        Some(path) => std::fs::write(path, &outcome.body),
        None => stdout.write_all(outcome.body.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return crate::EXIT_FAILURE;
    }
    outcome.code
}

pub fn run(cfg: &RunConfig) -> Result<Outcome, CliError> {
    match &cfg.command {
        Command::Table => Ok(table(cfg.format)),
        Command::Kr { space, i, d, reduced, kq } => Ok(kr(cfg.format, *space, *i, *d, *reduced, *kq)),
        Command::Classify(model) => classify_cmd(cfg.format, model),
        Command::Invariant { model, class } => invariant_cmd(cfg.format, model, *class),
        Command::Sweep { model, class, axis, range } => sweep_cmd(cfg.format, model, *class, axis, *range),
    }
}

fn json_body(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn table(format: Format) -> Outcome {
    #[derive(Serialize)]
    struct Row {
        class: AZClass,
        d: usize,
        group: String,
        ko_label: Option<i8>,
        index_tag: Option<&'static str>,
    }
    let entries: Vec<_> = generated_periodic_table()
        .into_iter()
        .map(|(class, d, _)| class_metadata(class, d).expect("real class, d in 1..=3"))
        .collect();
    let body = match format {
        Format::Json => json_body(
            &entries
                .iter()
                .map(|e| Row {
                    class: e.class,
                    d: e.d,
                    group: e.group.to_string(),
                    ko_label: e.ko_label,
                    index_tag: e.index_tag.map(|t| t.label()),
                })
                .collect::<Vec<_>>(),
        ),
        Format::Csv => {
            let mut rows = vec![["class", "d", "group", "ko_label", "index_tag"].map(String::from).to_vec()];
            rows.extend(entries.iter().map(|e| {
                vec![
                    e.class.to_string(),
                    e.d.to_string(),
                    e.group.to_string(),
                    e.ko_label.map_or(String::new(), |l| l.to_string()),
                    e.index_tag.map_or(String::new(), |t| t.label().to_string()),
                ]
            }));
            csv(&rows)
        }
        Format::Text => {
            let mut grid = vec![["class", "d=1", "d=2", "d=3"].map(String::from).to_vec()];
            for chunk in entries.chunks(3) {
                let mut row = vec![chunk[0].class.to_string()];
                row.extend(chunk.iter().map(|e| e.group.to_string()));
                grid.push(row);
            }
            let mut meta = vec![["class", "d", "group", "KO", "Fredholm", "homotopy", "source", "index"]
                .map(String::from)
                .to_vec()];
            meta.extend(entries.iter().filter(|e| !e.group.is_trivial()).map(|e| {
                vec![
                    e.class.to_string(),
                    e.d.to_string(),
                    e.group.to_string(),
                    e.ko_label.map_or("-".into(), |l| format!("KO^{l}")),
                    e.fredholm_label.map_or("-".into(), |f| format!("F{f}")),
                    opt(e.homotopy_label.as_ref()),
                    e.source_exponent.map_or("-".into(), |s| format!("KR^-{s}(X)")),
                    opt(e.index_tag),
                ]
            }));
            format!("{}\n{}", align(&grid), align(&meta))
        }
    };
    let issues = table_self_check();
    let code = if issues.is_empty() { 0 } else { crate::EXIT_FAILURE };
    let diagnostics = issues.into_iter().map(|i| format!("self-check: {i}")).collect();
    Outcome { body, diagnostics, code }
}

fn kr(format: Format, space: Space, i: i64, d: usize, reduced: bool, kq: bool) -> Outcome {
    let idx = KIndex::new(i);
    let group = match (space, kq) {
        (Space::Sphere, false) => kr_sphere(idx, d, reduced),
        (Space::Torus, false) => kr_torus(idx, d, reduced),
        (Space::Sphere, true) => kq_sphere(idx, d, reduced),
        (Space::Torus, true) => kq_torus(idx, d, reduced),
    };
    let space_name = match space {
        Space::Sphere => "sphere",
        Space::Torus => "torus",
    };
    let body = match format {
        Format::Text => format!("{group}\n"),
        Format::Json => json_body(&json!({
            "space": space_name, "i": i, "d": d, "reduced": reduced, "kq": kq, "group": group.to_string(),
        })),
        Format::Csv => csv(&[
            ["space", "i", "d", "reduced", "kq", "group"].map(String::from).to_vec(),
            vec![
                space_name.into(),
                i.to_string(),
                d.to_string(),
                reduced.to_string(),
                kq.to_string(),
                group.to_string(),
            ],
        ]),
    };
    Outcome { body, ..Outcome::default() }
}

fn candidates(model: &ModelConfig) -> Result<Vec<SymmetryOp<f64>>, CliError> {
    if !model.symmetries.is_empty() {
        return model.symmetries.iter().map(|s| s.build().map_err(CliError::from)).collect();
    }
    Ok(match model.source {
        ModelSource::Builtin(kind) => zoo_symmetries(kind),
        ModelSource::Terms { .. } => Vec::new(),
    })
}

fn sample(model: &ModelConfig, params: &ModelParams<f64>) -> Result<SampledBloch<f64>, CliError> {
    Ok(sample_grid(&model.build(params)?, model.grid)?)
}

fn sign_text(s: Sign) -> &'static str {
    match s {
        Sign::Plus => "+1",
        Sign::Minus => "−1",
    }
}

fn witness_list(c: &Classification<f64>) -> Vec<String> {
    let mut out = Vec::new();
    for op in [&c.trs, &c.phs].into_iter().flatten() {
        out.push(format!("{} {} witness: {}", op.kind(), sign_text(op.square()), op.label()));
    }
    if let Some(s) = &c.chiral {
        out.push(format!("CS witness: {}", s.label()));
    }
    out
}

fn classify_cmd(format: Format, model: &ModelConfig) -> Result<Outcome, CliError> {
    let sampled = sample(model, &model.params)?;
    let c = classify(&sampled, &candidates(model)?, model.tol)?;
    let witnesses = witness_list(&c);
    let body = match format {
        Format::Text => {
            let mut s = if witnesses.is_empty() {
                format!("{}\n", c.class)
            } else {
                format!("{} ({})\n", c.class, witnesses.join(", "))
            };
            if c.consistent_classes.len() > 1 {
                let all: Vec<String> = c.consistent_classes.iter().map(ToString::to_string).collect();
                s.push_str(&format!("consistent classes: {}\n", all.join(", ")));
            }
            s
        }
        Format::Json => json_body(&json!({
            "model": model.name(),
            "class": c.class,
            "consistent_classes": c.consistent_classes,
            "signature": c.signature,
            "witnesses": witnesses,
            "warnings": c.warnings,
        })),
        Format::Csv => {
            let classes: Vec<String> = c.consistent_classes.iter().map(ToString::to_string).collect();
            csv(&[
                ["model", "class", "consistent_classes", "witnesses"].map(String::from).to_vec(),
                vec![model.name().into(), c.class.to_string(), classes.join(" "), witnesses.join("; ")],
            ])
        }
    };
    let diagnostics = c.warnings.iter().map(|w| format!("warning: {w}")).collect();
    Ok(Outcome { body, diagnostics, code: 0 })
}

/// Class and witnesses for one parameter point. With an explicit class a
/// failed classification only loses the witnesses; without one it is fatal.
fn resolve(
    model: &ModelConfig,
    sampled: &SampledBloch<f64>,
    class: Option<AZClass>,
    diagnostics: &mut Vec<String>,
) -> Result<(AZClass, Witnesses<f64>), CliError> {
    match (classify(sampled, &candidates(model)?, model.tol), class) {
        (Ok(c), class) => {
            diagnostics.extend(c.warnings.iter().map(|w| format!("warning: {w}")));
            Ok((class.unwrap_or(c.class), Witnesses::from(&c)))
        }
        (Err(e @ SymmetryError::GaplessModel { .. }), _) | (Err(e), None) => Err(e.into()),
        (Err(e), Some(class)) => {
            diagnostics.push(format!("warning: no symmetry witnesses: {e}"));
            Ok((class, Witnesses::default()))
        }
    }
}

fn value_json(class: AZClass, v: &InvariantValue) -> serde_json::Value {
    json!({
        "class": class,
        "kind": v.kind,
        "value": v.value,
        "raw": round12(v.raw),
        "grid": v.grid_size,
        "residual": round12(v.residual),
    })
}

fn invariant_cmd(format: Format, model: &ModelConfig, class: Option<AZClass>) -> Result<Outcome, CliError> {
    let sampled = sample(model, &model.params)?;
    let mut diagnostics = Vec::new();
    let (class, witnesses) = resolve(model, &sampled, class, &mut diagnostics)?;
    let v = dispatch(class, &sampled, &witnesses)?;
    let body = match format {
        Format::Text => format!(
            "class={class} kind={} value={} raw={} grid={} residual={}\n",
            v.kind,
            v.value,
            fmt_float(v.raw),
            v.grid_size,
            fmt_float(v.residual)
        ),
        Format::Json => json_body(&value_json(class, &v)),
        Format::Csv => csv(&[
            ["class", "kind", "value", "raw", "grid", "residual"].map(String::from).to_vec(),
            vec![
                class.to_string(),
                v.kind.to_string(),
                v.value.to_string(),
                fmt_float(v.raw),
                v.grid_size.to_string(),
                fmt_float(v.residual),
            ],
        ]),
    };
    Ok(Outcome { body, diagnostics, code: 0 })
}

#[derive(Serialize)]
struct SweepRow {
    param: f64,
    kind: String,
    value: Option<i64>,
    raw: Option<f64>,
    residual: Option<f64>,
    gap: f64,
}

fn sweep_point(model: &ModelConfig, class: Option<AZClass>, axis: &str, x: f64, notes: &mut Vec<String>) -> SweepRow {
    let params = model.params.clone().with(axis, x);
    let row =
        |kind: &str, gap: f64| SweepRow { param: x, kind: kind.into(), value: None, raw: None, residual: None, gap };
    let sampled = match sample(model, &params) {
        Ok(s) => s,
        Err(e) => {
            notes.push(format!("{axis}={}: {e}", fmt_float(x)));
            return row("error", f64::NAN);
        }
    };
    let gap = sampled.min_gap();
    if sampled.is_gapless() {
        return row("gapless", gap);
    }
    let result = resolve(model, &sampled, class, notes)
        .and_then(|(class, w)| dispatch(class, &sampled, &w).map_err(CliError::from));
    match result {
        Ok(v) => SweepRow {
            param: x,
            kind: v.kind.to_string(),
            value: Some(v.value),
            raw: Some(v.raw),
            residual: Some(v.residual),
            gap,
        },
        Err(CliError::Invariant(InvariantError::GaplessModel { .. })) => row("gapless", gap),
        Err(CliError::Invariant(e)) if is_nonconvergent(&e) => {
            notes.push(format!("{axis}={}: {e}", fmt_float(x)));
            row("nonconvergent", gap)
        }
        Err(e) => {
            notes.push(format!("{axis}={}: {e}", fmt_float(x)));
            row("error", gap)
        }
    }
}

fn sweep_cmd(
    format: Format,
    model: &ModelConfig,
    class: Option<AZClass>,
    axis: &str,
    range: SweepRange,
) -> Result<Outcome, CliError> {
    let mut notes = Vec::new();
    let rows: Vec<SweepRow> =
        (0..range.len()).map(|i| sweep_point(model, class, axis, range.value(i), &mut notes)).collect();
    notes.sort();
    notes.dedup();

    let cells = |r: &SweepRow| {
        let f = |x: Option<f64>| x.map_or(String::new(), fmt_float);
        vec![
            fmt_float(r.param),
            r.kind.clone(),
            r.value.map_or(String::new(), |v| v.to_string()),
            f(r.raw),
            f(r.residual),
            fmt_float(r.gap),
        ]
    };
    let header = ["param", "kind", "value", "raw", "residual", "gap"].map(String::from).to_vec();
    let body = match format {
        Format::Csv => csv(&std::iter::once(header).chain(rows.iter().map(cells)).collect::<Vec<_>>()),
        Format::Text => align(&std::iter::once(header).chain(rows.iter().map(cells)).collect::<Vec<_>>()),
        Format::Json => {
            let rounded: Vec<SweepRow> = rows
                .into_iter()
                .map(|r| SweepRow {
                    param: round12(r.param),
                    raw: r.raw.map(round12),
                    residual: r.residual.map(round12),
                    gap: round12(r.gap),
                    ..r
                })
                .collect();
            json_body(&rounded)
        }
    };
    Ok(Outcome { body, diagnostics: notes, code: 0 })
}
