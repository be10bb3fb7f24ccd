use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use super::table::{penta_cells, read_table, write_table, Cell, Row};
use super::{CliError, Kind, OutputArgs, SetOp};
use crate::algebra::{conjugate_tnorm, tconorm, tnorm, FrankParameter, UnitValue};
use crate::decomposition::{
    compose as compose_pair, decompose as decompose_pair, decompose_lg, BipolarPair, PentaCoords,
};
use crate::logic::{eval_expr, parse_expr, truth_table_capped, Assignment, ParseError};
use crate::sets::{
    complement, from_bipolar, from_fuzzy, from_intuitionistic, from_paraconsistent, intersection, union,
    BipolarInputSet, FP5Set, Fp5Grade, FuzzySet, SetError, CONSTRAINT_TOLERANCE,
};

/// Allowed gap between a supplied `iota` and `1 − τ − φ − κ − π`.
pub const IOTA_TOLERANCE: f64 = 1e-6;

const PENTA_COLUMNS: [&str; 5] = ["tau", "phi", "kappa", "pi", "iota"];

fn with_element<'a>(has_element: bool, columns: &[&'a str]) -> Vec<&'a str> {
    has_element
        .then_some("element")
        .into_iter()
        .chain(columns.iter().copied())
        .collect()
}

fn element_cell(row: &Row) -> Cell {
    Cell::Text(row.text("element").unwrap_or_default().to_string())
}

pub fn decompose(input: &Path, s: FrankParameter, out: &OutputArgs) -> Result<(), CliError> {
    let table = read_table(input, out.format)?;
    table.require(&["mu", "nu"])?;
    let has_element = table.has_column("element");

    let mut rows = Vec::with_capacity(table.rows.len());
    for row in &table.rows {
        let pair = BipolarPair {
            x: row.unit("mu")?,
            y: row.unit("nu")?,
        };
        let coords = if s == FrankParameter::MIN {
            decompose_lg(pair)
        } else {
            decompose_pair(pair, s).map_err(|e| CliError::Data(format!("row {}: {e}", row.number)))?
        };
        let mut cells: Vec<Cell> = has_element.then(|| element_cell(row)).into_iter().collect();
        cells.extend(penta_cells(
            [coords.tau(), coords.phi(), coords.kappa(), coords.pi()],
            out.precision,
        ));
        rows.push(cells);
    }
    write_table(
        out.output.as_deref(),
        out.format,
        out.precision,
        &with_element(has_element, &PENTA_COLUMNS),
        &rows,
    )
}

/// Reads `τ, φ, κ, π` and checks them, and `ι` when present, against the
/// partition of unity.
fn penta_row(row: &Row) -> Result<[f64; 4], CliError> {
    let mut four = [0.0; 4];
    for (slot, column) in four.iter_mut().zip(&PENTA_COLUMNS[..4]) {
        *slot = row.unit(column)?.get();
    }
    let sum: f64 = four.iter().sum();
    if sum > 1.0 + CONSTRAINT_TOLERANCE {
        return Err(CliError::Data(format!(
            "row {}: partition violation: tau+phi+kappa+pi = {sum} exceeds 1",
            row.number
        )));
    }
    if row.has("iota") {
        let given = row.unit("iota")?.get();
        let residual = (1.0 - sum).max(0.0);
        if (given - residual).abs() > IOTA_TOLERANCE {
            return Err(CliError::Data(format!(
                "row {}: partition violation: iota = {given} but 1-tau-phi-kappa-pi = {residual}",
                row.number
            )));
        }
    }
    Ok(four)
}

pub fn compose(input: &Path, out: &OutputArgs) -> Result<(), CliError> {
    let table = read_table(input, out.format)?;
    table.require(&PENTA_COLUMNS[..4])?;
    let has_element = table.has_column("element");

    let mut rows = Vec::with_capacity(table.rows.len());
    for row in &table.rows {
        let [tau, phi, kappa, pi] = penta_row(row)?;
        let coords = PentaCoords::from_four(tau, phi, kappa, pi)
            .map_err(|e| CliError::Data(format!("row {}: {e}", row.number)))?;
        let pair = compose_pair(&coords);
        let mut cells: Vec<Cell> = has_element.then(|| element_cell(row)).into_iter().collect();
        cells.extend([Cell::Num(pair.x.get()), Cell::Num(pair.y.get())]);
        rows.push(cells);
    }
    write_table(
        out.output.as_deref(),
        out.format,
        out.precision,
        &with_element(has_element, &["mu", "nu"]),
        &rows,
    )
}

/// The error message followed by the input with a caret under the offset.
pub fn syntax_diagnostic(text: &str, err: &ParseError) -> String {
    let column = text[..err.offset().min(text.len())].chars().count();
    format!("{err}\n  {text}\n  {}^", " ".repeat(column))
}

fn open_output(output: Option<&Path>) -> Result<Box<dyn Write>, CliError> {
    Ok(match output {
        Some(path) => Box::new(BufWriter::new(File::create(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

pub fn logic(
    text: &str,
    assign: Option<&str>,
    table: bool,
    max_vars: usize,
    output: Option<&Path>,
) -> Result<(), CliError> {
    let expr = parse_expr(text).map_err(|e| CliError::Syntax(syntax_diagnostic(text, &e)))?;
    let io_err = |source: io::Error| CliError::Io {
        path: output.map_or_else(|| "<stdout>".to_string(), |p| p.display().to_string()),
        source,
    };
    let mut sink = open_output(output)?;
    if table {
        let rows = truth_table_capped(&expr, max_vars).map_err(|e| CliError::Usage(e.to_string()))?;
        rows.write_csv(&mut sink).map_err(io_err)?;
    } else {
        let env: Assignment = assign
            .unwrap_or_default()
            .parse()
            .map_err(|e| CliError::Usage(format!("bad --assign: {e}")))?;
        let value = eval_expr(&expr, &env).map_err(|e| CliError::Usage(e.to_string()))?;
        writeln!(sink, "{value}").map_err(io_err)?;
    }
    sink.flush().map_err(io_err)
}

fn set_error(path: &Path, err: SetError) -> CliError {
    CliError::Data(format!("{}: {err}", path.display()))
}

fn load_set(path: &Path, kind: Kind, format: super::Format) -> Result<FP5Set, CliError> {
    let table = read_table(path, format)?;
    let located = |e: CliError| match e {
        CliError::Data(msg) => CliError::Data(format!("{}: {msg}", path.display())),
        other => other,
    };
    table.require(&["element"]).map_err(located)?;
    match kind {
        Kind::Fuzzy => {
            table.require(&["mu"]).map_err(located)?;
            let elements = table
                .rows
                .iter()
                .map(|row| Ok((row.element()?, row.unit("mu")?)))
                .collect::<Result<Vec<(String, UnitValue)>, CliError>>()
                .map_err(located)?;
            let fuzzy = FuzzySet::new(elements).map_err(|e| set_error(path, e))?;
            Ok(from_fuzzy(&fuzzy))
        }
        Kind::Ifs | Kind::Pfs | Kind::Bipolar => {
            table.require(&["mu", "nu"]).map_err(located)?;
            let elements = table
                .rows
                .iter()
                .map(|row| {
                    let pair = BipolarPair {
                        x: row.unit("mu")?,
                        y: row.unit("nu")?,
                    };
                    Ok((row.element()?, pair))
                })
                .collect::<Result<Vec<_>, CliError>>()
                .map_err(located)?;
            let input = BipolarInputSet::new(elements).map_err(|e| set_error(path, e))?;
            match kind {
                Kind::Ifs => from_intuitionistic(&input).map_err(|e| set_error(path, e)),
                Kind::Pfs => from_paraconsistent(&input).map_err(|e| set_error(path, e)),
                _ => Ok(from_bipolar(&input)),
            }
        }
        Kind::Fp5 => {
            table.require(&PENTA_COLUMNS[..4]).map_err(located)?;
            let elements = table
                .rows
                .iter()
                .map(|row| {
                    let [tau, phi, kappa, pi] = penta_row(row)?;
                    let grade = Fp5Grade::new(tau, phi, kappa, pi)
                        .map_err(|e| CliError::Data(format!("row {}: {e}", row.number)))?;
                    Ok((row.element()?, grade))
                })
                .collect::<Result<Vec<_>, CliError>>()
                .map_err(located)?;
            FP5Set::new(elements).map_err(|e| set_error(path, e))
        }
    }
}

pub fn setop(
    op: SetOp,
    couple: crate::sets::NormCouple,
    kind: Kind,
    inputs: &[PathBuf],
    out: &OutputArgs,
) -> Result<(), CliError> {
    let expected = match op {
        SetOp::Union | SetOp::Intersect => 2,
        SetOp::Complement | SetOp::Translate => 1,
    };
    if inputs.len() != expected {
        return Err(CliError::Usage(format!(
            "--op {} takes exactly {expected} --input file(s), got {}",
            format!("{op:?}").to_lowercase(),
            inputs.len()
        )));
    }
    let sets = inputs
        .iter()
        .map(|path| load_set(path, kind, out.format))
        .collect::<Result<Vec<_>, _>>()?;
    let result = match op {
        SetOp::Union => union(&sets[0], &sets[1], couple),
        SetOp::Intersect => intersection(&sets[0], &sets[1], couple),
        SetOp::Complement => Ok(complement(&sets[0])),
        SetOp::Translate => Ok(sets[0].clone()),
    }
    .map_err(|e| CliError::Data(e.to_string()))?;

    let rows: Vec<Vec<Cell>> = result
        .iter()
        .map(|(element, g)| {
            let mut cells = vec![Cell::Text(element.to_string())];
            cells.extend(penta_cells([g.tau(), g.phi(), g.kappa(), g.pi()], out.precision));
            cells
        })
        .collect();
    write_table(
        out.output.as_deref(),
        out.format,
        out.precision,
        &with_element(true, &PENTA_COLUMNS),
        &rows,
    )
}

/// Grid coordinates `0, step, 2·step, …` up to 1, snapped to 12 decimals.
pub fn grid_points(step: f64) -> Vec<f64> {
    let count = (1.0 / step + 1e-9).floor() as usize;
    (0..=count)
        .map(|k| ((k as f64 * step * 1e12).round() / 1e12).min(1.0))
        .collect()
}

pub fn tnorm_grid(s: FrankParameter, step: f64, out: &OutputArgs) -> Result<(), CliError> {
    if !(step > 0.0 && step <= 0.5) {
        return Err(CliError::Usage(format!(
            "--step must satisfy 0 < step <= 0.5, got {step}"
        )));
    }
    let points = grid_points(step);
    let mut rows = Vec::with_capacity(points.len() * points.len());
    for &x in &points {
        for &y in &points {
            let (ux, uy) = (UnitValue::new(x).expect("grid"), UnitValue::new(y).expect("grid"));
            rows.push(vec![
                Cell::Num(x),
                Cell::Num(y),
                Cell::Num(tnorm(s, ux, uy).get()),
                Cell::Num(tconorm(s, ux, uy).get()),
                Cell::Num(conjugate_tnorm(s, ux, uy).get()),
            ]);
        }
    }
    write_table(
        out.output.as_deref(),
        out.format,
        out.precision,
        &["x", "y", "tnorm", "tconorm", "conjugate"],
        &rows,
    )
}
