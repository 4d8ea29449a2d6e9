//! Tables of GW invariants and enumerative counts of `P^3` with point
//! constraints, the triangular transforms between them, and the CSV and
//! Markdown encodings.
//!
//! Real flavor: `GW_g = sum_{h <= g, g-h even} Ct_{h}((g-h)/2) E_h` with
//! `Ct` from [`coeff_real`]. Complex flavor: `GW_g = sum_{h <= g} C_h(g-h) E_h`
//! with `C` from [`coeff_cx`]. In both, `c1 = 4d`.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::path::Path;
use std::str::FromStr;

use num_traits::Zero;

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::series_ids::{coeff_cx, coeff_real};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    Real,
    Complex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Gw,
    E,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Real => "real",
            Flavor::Complex => "complex",
        })
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Gw => "GW",
            Kind::E => "E",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Read from a table file.
    Loaded,
    /// Produced by localization.
    Computed,
    /// Produced by a transform from other entries.
    Transformed,
    /// Absent in the input but forced to zero by the parity rule.
    ImpliedZero,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Entry {
    pub value: Rational,
    pub provenance: Provenance,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Markdown,
}

/// Entries keyed by `(genus, degree)`.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantTable {
    pub flavor: Flavor,
    pub kind: Kind,
    pub entries: BTreeMap<(u32, u32), Entry>,
}

impl InvariantTable {
    pub fn new(flavor: Flavor, kind: Kind) -> Self {
        InvariantTable { flavor, kind, entries: BTreeMap::new() }
    }

    pub fn insert(&mut self, genus: u32, degree: u32, value: Rational, provenance: Provenance) {
        self.entries.insert((genus, degree), Entry { value, provenance });
    }

    pub fn get(&self, genus: u32, degree: u32) -> Option<&Rational> {
        self.entries.get(&(genus, degree)).map(|e| &e.value)
    }

    pub fn degrees(&self) -> Vec<u32> {
        let mut ds: Vec<u32> = self.entries.keys().map(|&(_, d)| d).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    pub fn genera(&self) -> Vec<u32> {
        let mut gs: Vec<u32> = self.entries.keys().map(|&(g, _)| g).collect();
        gs.sort_unstable();
        gs.dedup();
        gs
    }

    fn expect(&self, flavor: Option<Flavor>, kind: Kind) -> Result<()> {
        if self.kind != kind || flavor.is_some_and(|f| f != self.flavor) {
            return Err(Error::TableMismatch {
                expected: format!("{},{kind}", flavor.unwrap_or(self.flavor)),
                found: format!("{},{}", self.flavor, self.kind),
            });
        }
        Ok(())
    }
}

fn parity_forces_zero(flavor: Flavor, genus: u32, degree: u32) -> bool {
    flavor == Flavor::Real && (degree as i64 - genus as i64) % 2 == 0
}

/// Coefficient of `E_h` in `GW_g` at degree `d`; `None` if not in the sum.
fn transform_coeff(flavor: Flavor, h: u32, g: u32, d: u32) -> Option<Rational> {
    let c1 = 4 * d as i64;
    match flavor {
        Flavor::Real => {
            if (g - h) % 2 != 0 {
                return None;
            }
            Some(coeff_real(h, c1, (g - h) / 2).expect("c1 = 4d is even"))
        }
        Flavor::Complex => Some(coeff_cx(h, c1, g - h)),
    }
}

/// Looks up `(h, d)`, allowing parity zeros.
fn lookup(table: &InvariantTable, h: u32, d: u32) -> Result<(Rational, bool)> {
    match table.get(h, d) {
        Some(v) => Ok((v.clone(), false)),
        None if parity_forces_zero(table.flavor, h, d) => Ok((Rational::zero(), true)),
        None => Err(Error::MissingEntry {
            kind: if table.kind == Kind::Gw { "GW" } else { "E" },
            genus: h,
            degree: d,
        }),
    }
}

/// Solves the unit lower-triangular system for the enumerative counts.
pub fn e_from_gw(table: &InvariantTable) -> Result<InvariantTable> {
    table.expect(None, Kind::Gw)?;
    let flavor = table.flavor;
    let mut out = InvariantTable::new(flavor, Kind::E);
    for d in table.degrees() {
        let top = table.entries.keys().filter(|k| k.1 == d).map(|k| k.0).max().unwrap_or(0);
        let mut e: Vec<Option<Rational>> = vec![None; top as usize + 1];
        for g in 0..=top {
            let needed = table.get(g, d).is_some()
                || table.entries.keys().any(|&(g2, d2)| d2 == d && g2 > g && transform_coeff(flavor, g, g2, d).is_some());
            if !needed {
                continue;
            }
            let (gw, implied) = lookup(table, g, d)?;
            let mut value = gw;
            for h in 0..g {
                if let Some(c) = transform_coeff(flavor, h, g, d) {
                    let eh = e[h as usize].clone().ok_or(Error::MissingEntry { kind: "GW", genus: h, degree: d })?;
                    value -= c * eh;
                }
            }
            e[g as usize] = Some(value.clone());
            if table.get(g, d).is_some() {
                out.insert(g, d, value, Provenance::Transformed);
            } else if implied {
                out.insert(g, d, value, Provenance::ImpliedZero);
            }
        }
    }
    Ok(out)
}

/// Forward transform from enumerative counts to GW invariants.
pub fn gw_from_e(table: &InvariantTable) -> Result<InvariantTable> {
    table.expect(None, Kind::E)?;
    let flavor = table.flavor;
    let mut out = InvariantTable::new(flavor, Kind::Gw);
    for (&(g, d), _) in &table.entries {
        let mut value = Rational::zero();
        for h in 0..=g {
            if let Some(c) = transform_coeff(flavor, h, g, d) {
                let (eh, _) = lookup(table, h, d)?;
                value += c * eh;
            }
        }
        out.insert(g, d, value, Provenance::Transformed);
    }
    Ok(out)
}

/// Nonzero real entries with `d - g` even.
pub fn parity_check(table: &InvariantTable) -> Result<Vec<(u32, u32, Rational)>> {
    if table.flavor != Flavor::Real {
        return Err(Error::InvalidArgument("parity check applies to real tables only".into()));
    }
    Ok(table
        .entries
        .iter()
        .filter(|(&(g, d), e)| parity_forces_zero(Flavor::Real, g, d) && !e.value.is_zero())
        .map(|(&(g, d), e)| (g, d, e.value.clone()))
        .collect())
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

fn parse_rational(s: &str, line: usize, column: usize) -> Result<Rational> {
    if s.contains('.') || s.is_empty() {
        return Err(parse_err(line, column, format!("expected integer or p/q, found {s:?}")));
    }
    if let Some((_, q)) = s.split_once('/') {
        if q.trim_start_matches('+').chars().all(|c| c == '0') {
            return Err(parse_err(line, column, "zero denominator"));
        }
    }
    Rational::from_str(s).map_err(|_| parse_err(line, column, format!("expected integer or p/q, found {s:?}")))
}

/// Parses one or more `flavor,kind` blocks.
pub fn parse_tables(text: &str) -> Result<Vec<InvariantTable>> {
    let mut tables = Vec::new();
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim_end_matches('\r')));
    let mut current: Option<InvariantTable> = None;
    while let Some((no, line)) = lines.next() {
        if line.trim().is_empty() {
            continue;
        }
        if line == "flavor,kind" {
            if let Some(t) = current.take() {
                tables.push(t);
            }
            let (no2, spec) = lines.next().ok_or_else(|| parse_err(no + 1, 1, "missing flavor,kind values"))?;
            let (f, k) = spec.split_once(',').ok_or_else(|| parse_err(no2, 1, "expected flavor,kind"))?;
            let flavor = match f {
                "real" => Flavor::Real,
                "complex" => Flavor::Complex,
                _ => return Err(parse_err(no2, 1, format!("unknown flavor {f:?}"))),
            };
            let kind = match k {
                "GW" => Kind::Gw,
                "E" => Kind::E,
                _ => return Err(parse_err(no2, f.len() + 2, format!("unknown kind {k:?}"))),
            };
            let (no3, cols) = lines.next().ok_or_else(|| parse_err(no2 + 1, 1, "missing column header"))?;
            if cols != "genus,degree,value" {
                return Err(parse_err(no3, 1, "expected genus,degree,value"));
            }
            current = Some(InvariantTable::new(flavor, kind));
            continue;
        }
        let table = current.as_mut().ok_or_else(|| parse_err(no, 1, "row before flavor,kind header"))?;
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 3 {
            return Err(parse_err(no, 1, format!("expected 3 fields, found {}", fields.len())));
        }
        let g: u32 = fields[0].parse().map_err(|_| parse_err(no, 1, format!("bad genus {:?}", fields[0])))?;
        let c2 = fields[0].len() + 2;
        let d: u32 = fields[1].parse().map_err(|_| parse_err(no, c2, format!("bad degree {:?}", fields[1])))?;
        let c3 = c2 + fields[1].len() + 1;
        let v = parse_rational(fields[2], no, c3)?;
        if table.entries.contains_key(&(g, d)) {
            return Err(parse_err(no, 1, format!("duplicate entry for genus {g}, degree {d}")));
        }
        table.insert(g, d, v, Provenance::Loaded);
    }
    if let Some(t) = current.take() {
        tables.push(t);
    }
    if tables.is_empty() {
        return Err(parse_err(1, 1, "no table found"));
    }
    Ok(tables)
}

pub fn load_tables(path: impl AsRef<Path>) -> Result<Vec<InvariantTable>> {
    parse_tables(&std::fs::read_to_string(path)?)
}

/// Loads a file holding exactly one table.
pub fn load_table(path: impl AsRef<Path>) -> Result<InvariantTable> {
    let mut tables = load_tables(path)?;
    if tables.len() != 1 {
        return Err(Error::InvalidArgument(format!("expected one table, found {}", tables.len())));
    }
    Ok(tables.remove(0))
}

pub fn emit_table(table: &InvariantTable, format: Format) -> String {
    let mut s = String::new();
    match format {
        Format::Csv => {
            writeln!(s, "flavor,kind\n{},{}\ngenus,degree,value", table.flavor, table.kind).unwrap();
            for (&(g, d), e) in &table.entries {
                writeln!(s, "{g},{d},{}", e.value).unwrap();
            }
        }
        Format::Markdown => {
            let ds = table.degrees();
            let sup = if table.flavor == Flavor::Real { "^phi" } else { "" };
            write!(s, "| d |").unwrap();
            for d in &ds {
                write!(s, " {d} |").unwrap();
            }
            write!(s, "\n|---|").unwrap();
            for _ in &ds {
                write!(s, "---|").unwrap();
            }
            s.push('\n');
            for g in table.genera() {
                write!(s, "| {}{sup}_{{{g},d}} |", table.kind).unwrap();
                for &d in &ds {
                    match table.get(g, d) {
                        Some(v) => write!(s, " {v} |").unwrap(),
                        None => write!(s, "  |").unwrap(),
                    }
                }
                s.push('\n');
            }
        }
    }
    s
}

/// Blocks joined by a blank line.
pub fn emit_tables(tables: &[InvariantTable], format: Format) -> String {
    tables.iter().map(|t| emit_table(t, format)).collect::<Vec<_>>().join("\n")
}

pub const TABLE1_COMPLEX: &str = include_str!("../data/table1_complex.csv");
pub const TABLE2_REAL: &str = include_str!("../data/table2_real.csv");

/// The bundled GW and E tables for `which` in `{1, 2}`.
pub fn bundled(which: u32) -> Result<(InvariantTable, InvariantTable)> {
    let text = match which {
        1 => TABLE1_COMPLEX,
        2 => TABLE2_REAL,
        _ => return Err(Error::InvalidArgument(format!("no bundled table {which}"))),
    };
    let mut tables = parse_tables(text)?;
    if tables.len() != 2 {
        return Err(Error::InvalidArgument("bundled file must hold a GW and an E block".into()));
    }
    let e = tables.pop().expect("two tables");
    let gw = tables.pop().expect("two tables");
    gw.expect(None, Kind::Gw)?;
    e.expect(Some(gw.flavor), Kind::E)?;
    Ok((gw, e))
}
