//! Text, JSON and CSV renderings. Every number is plain decimal.

use clap::ValueEnum;
use serde::Serialize;
use symcube::{Character, Count, Decomposition, IrrepLabel, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Serialize)]
struct DimJson {
    m: u32,
    weight: [i64; 3],
    dim: Count,
}

#[derive(Serialize)]
struct MultJson {
    m: u32,
    label: [u32; 3],
    mult: Count,
}

#[derive(Serialize)]
struct DecompositionEntry {
    label: [u32; 3],
    mult: Count,
}

#[derive(Serialize)]
struct DecompositionJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<u32>,
    entries: Vec<DecompositionEntry>,
    total_dim: Count,
}

#[derive(Serialize)]
struct CharacterEntry {
    weight: [i64; 3],
    dim: Count,
}

#[derive(Serialize)]
struct CharacterJson {
    m: u32,
    entries: Vec<CharacterEntry>,
    total_dim: Count,
}

fn csv_table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory csv");
    for row in rows {
        w.write_record(&row).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("ascii csv")
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn dim(format: OutputFormat, m: u32, w: Weight, dim: Count) -> String {
    match format {
        OutputFormat::Text => format!("{dim}\n"),
        OutputFormat::Json => json_line(&DimJson {
            m,
            weight: w.components(),
            dim,
        }),
        OutputFormat::Csv => csv_table(
            &["m", "l1", "l2", "l3", "dim"],
            [vec![
                m.to_string(),
                w.l1.to_string(),
                w.l2.to_string(),
                w.l3.to_string(),
                dim.to_string(),
            ]],
        ),
    }
}

pub fn mult(format: OutputFormat, m: u32, label: IrrepLabel, mult: Count) -> String {
    match format {
        OutputFormat::Text => format!("{mult}\n"),
        OutputFormat::Json => json_line(&MultJson {
            m,
            label: label.components(),
            mult,
        }),
        OutputFormat::Csv => csv_table(
            &["m", "n1", "n2", "n3", "mult"],
            [vec![
                m.to_string(),
                label.n1.to_string(),
                label.n2.to_string(),
                label.n3.to_string(),
                mult.to_string(),
            ]],
        ),
    }
}

/// Rows are `(label, multiplicity)` in display order; they may include zero
/// multiplicities, which never contribute to `total_dim`.
pub fn decomposition(
    format: OutputFormat,
    m: Option<u32>,
    rows: &[(IrrepLabel, Count)],
    total_dim: Count,
) -> String {
    match format {
        OutputFormat::Text => {
            let mut out = String::new();
            for (l, x) in rows {
                out.push_str(&format!("{} {} {} {}\n", l.n1, l.n2, l.n3, x));
            }
            out.push_str(&format!("total_dim = {total_dim}\n"));
            out
        }
        OutputFormat::Json => json_line(&DecompositionJson {
            m,
            entries: rows
                .iter()
                .map(|&(l, mult)| DecompositionEntry {
                    label: l.components(),
                    mult,
                })
                .collect(),
            total_dim,
        }),
        OutputFormat::Csv => csv_table(
            &["n1", "n2", "n3", "mult"],
            rows.iter().map(|(l, x)| {
                vec![
                    l.n1.to_string(),
                    l.n2.to_string(),
                    l.n3.to_string(),
                    x.to_string(),
                ]
            }),
        ),
    }
}

pub fn decomposition_rows(d: &Decomposition) -> Vec<(IrrepLabel, Count)> {
    d.iter_desc().collect()
}

pub fn character(format: OutputFormat, m: u32, c: &Character, total_dim: Count) -> String {
    match format {
        OutputFormat::Text => symcube::write_character(c),
        OutputFormat::Json => json_line(&CharacterJson {
            m,
            entries: c
                .iter_desc()
                .map(|(w, dim)| CharacterEntry {
                    weight: w.components(),
                    dim,
                })
                .collect(),
            total_dim,
        }),
        OutputFormat::Csv => csv_table(
            &["l1", "l2", "l3", "dim"],
            c.iter_desc().map(|(w, d)| {
                vec![
                    w.l1.to_string(),
                    w.l2.to_string(),
                    w.l3.to_string(),
                    d.to_string(),
                ]
            }),
        ),
    }
}
