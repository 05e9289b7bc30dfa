use std::io::{self, Write};

use serde::Serialize;
use tableau_sign::harness::VerificationReport;
use tableau_sign::{ImbalanceRecord, Permutation, Shape, Tableau};

use crate::Format;

pub const TABLE_HEADER: [&str; 9] = ["shape", "imbalance", "v", "h", "d", "vs", "hs", "black", "white"];

#[derive(Serialize)]
struct CsvRow {
    shape: String,
    imbalance: i64,
    v: usize,
    h: usize,
    d: usize,
    vs: usize,
    hs: usize,
    black: usize,
    white: usize,
}

impl From<&ImbalanceRecord> for CsvRow {
    fn from(r: &ImbalanceRecord) -> Self {
        CsvRow {
            shape: parts_text(&r.shape),
            imbalance: r.imbalance,
            v: r.v,
            h: r.h,
            d: r.d,
            vs: r.vs,
            hs: r.hs,
            black: r.black,
            white: r.white,
        }
    }
}

fn parts_text(shape: &Shape) -> String {
    shape.parts().iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn csv_writer(out: &mut impl Write) -> csv::Writer<&mut impl Write> {
    csv::WriterBuilder::new()
        .quote_style(csv::QuoteStyle::NonNumeric)
        .from_writer(out)
}

fn into_io(e: csv::Error) -> io::Error {
    io::Error::other(e)
}

fn json(out: &mut impl Write, value: &impl Serialize) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

pub fn record(out: &mut impl Write, format: Format, r: &ImbalanceRecord) -> io::Result<()> {
    match format {
        Format::Plain => {
            let fields = [
                ("shape", r.shape.to_string()),
                ("imbalance", r.imbalance.to_string()),
                ("v", r.v.to_string()),
                ("h", r.h.to_string()),
                ("d", r.d.to_string()),
                ("vs", r.vs.to_string()),
                ("hs", r.hs.to_string()),
                ("black", r.black.to_string()),
                ("white", r.white.to_string()),
            ];
            for (name, value) in fields {
                writeln!(out, "{name:<10} {value}")?;
            }
            Ok(())
        }
        Format::Json => json(out, r),
        Format::Csv => table(out, format, std::slice::from_ref(r)),
    }
}

pub fn table(out: &mut impl Write, format: Format, rows: &[ImbalanceRecord]) -> io::Result<()> {
    match format {
        Format::Plain => {
            let shapes: Vec<String> = rows.iter().map(|r| r.shape.to_string()).collect();
            let width = shapes.iter().map(String::len).chain([5]).max().unwrap_or(5);
            write!(out, "{:<width$}", TABLE_HEADER[0])?;
            for name in &TABLE_HEADER[1..] {
                write!(out, " {name:>9}")?;
            }
            writeln!(out)?;
            for (r, shape) in rows.iter().zip(&shapes) {
                write!(out, "{shape:<width$}")?;
                for x in [r.imbalance, r.v as i64, r.h as i64, r.d as i64, r.vs as i64, r.hs as i64, r.black as i64, r.white as i64] {
                    write!(out, " {x:>9}")?;
                }
                writeln!(out)?;
            }
            Ok(())
        }
        Format::Json => json(out, &rows),
        Format::Csv => {
            let mut w = csv_writer(out);
            if rows.is_empty() {
                w.write_record(TABLE_HEADER).map_err(into_io)?;
            }
            for r in rows {
                w.serialize(CsvRow::from(r)).map_err(into_io)?;
            }
            w.flush()
        }
    }
}

fn report_status(r: &VerificationReport) -> &'static str {
    match (&r.expected, r.pass) {
        (None, _) => "NOTE",
        (Some(_), true) => "PASS",
        (Some(_), false) => "FAIL",
    }
}

pub fn reports(out: &mut impl Write, format: Format, reports: &[VerificationReport]) -> io::Result<()> {
    match format {
        Format::Plain => {
            for r in reports {
                let expected = match &r.expected {
                    Some(e) => e.to_string(),
                    None => "(not asserted)".to_string(),
                };
                writeln!(
                    out,
                    "{} {:<10} {}: computed {}, expected {}",
                    report_status(r),
                    r.claim_id,
                    r.parameter_string(),
                    r.computed,
                    expected
                )?;
            }
            let failed = reports.iter().filter(|r| !r.pass).count();
            let noted = reports.iter().filter(|r| r.expected.is_none()).count();
            let passed = reports.len() - failed - noted;
            writeln!(out, "{passed} passed, {failed} failed, {noted} not asserted")
        }
        Format::Json => json(out, &reports),
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["claim", "parameters", "computed", "expected", "status"]).map_err(into_io)?;
            for r in reports {
                let expected = r.expected.as_ref().map(ToString::to_string).unwrap_or_default();
                w.write_record([
                    r.claim_id,
                    &r.parameter_string(),
                    &r.computed.to_string(),
                    &expected,
                    report_status(r),
                ])
                .map_err(into_io)?;
            }
            w.flush()
        }
    }
}

pub struct RsSummary<'a> {
    pub pi: &'a Permutation,
    pub p: &'a Tableau,
    pub q: &'a Tableau,
    pub v: usize,
    pub holds: bool,
}

#[derive(Serialize)]
struct RsJson<'a> {
    permutation: &'a [u32],
    p: Vec<&'a [u32]>,
    q: Vec<&'a [u32]>,
    shape: &'a Shape,
    sign_pi: i64,
    sign_p: i64,
    sign_q: i64,
    v: usize,
    relation_holds: bool,
}

fn rows_text(t: &Tableau) -> String {
    t.rows()
        .iter()
        .map(|row| row.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("/")
}

pub fn rs(out: &mut impl Write, format: Format, s: &RsSummary) -> io::Result<()> {
    let (sp, sq, spi) = (s.p.sign().value(), s.q.sign().value(), s.pi.sign().value());
    match format {
        Format::Plain => {
            for (name, t) in [("P", s.p), ("Q", s.q)] {
                writeln!(out, "{name}:")?;
                for row in t.rows() {
                    let cells: Vec<String> = row.iter().map(|x| format!("{x:>2}")).collect();
                    writeln!(out, "  {}", cells.join(" "))?;
                }
            }
            writeln!(out, "shape     {}", s.p.shape())?;
            writeln!(out, "sgn(pi)   {spi}")?;
            writeln!(out, "sgn(P)    {sp}")?;
            writeln!(out, "sgn(Q)    {sq}")?;
            writeln!(out, "v         {}", s.v)?;
            let verdict = if s.holds { "holds" } else { "FAILS" };
            writeln!(out, "relation  sgn(pi) = (-1)^v sgn(P) sgn(Q): {spi} = (-1)^{} * ({sp}) * ({sq})  {verdict}", s.v)
        }
        Format::Json => json(
            out,
            &RsJson {
                permutation: s.pi.images(),
                p: s.p.rows(),
                q: s.q.rows(),
                shape: s.p.shape(),
                sign_pi: spi,
                sign_p: sp,
                sign_q: sq,
                v: s.v,
                relation_holds: s.holds,
            },
        ),
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["permutation", "p", "q", "shape", "sign_pi", "sign_p", "sign_q", "v", "relation_holds"])
                .map_err(into_io)?;
            w.write_record([
                s.pi.to_string(),
                rows_text(s.p),
                rows_text(s.q),
                parts_text(s.p.shape()),
                spi.to_string(),
                sp.to_string(),
                sq.to_string(),
                s.v.to_string(),
                s.holds.to_string(),
            ])
            .map_err(into_io)?;
            w.flush()
        }
    }
}
