//! The list of `(n, k/d)` for which the monodromy group of the `λ^k`
//! eigenperiod map is discrete, with signatures and `H(n, d, k)`, shipped as
//! CSV and cross-checked against the computations in this crate.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize, Serializer};

use crate::cover::{signature, CoverData};
use crate::error::{ParseError, Result};
use crate::exact::Rational;
use crate::git::{codim_h_closed, codim_h_oracle, CodimResult};

const EXPLICIT_CSV: &str = include_str!("../data/table1.csv");
const PARAMETRIC_CSV: &str = include_str!("../data/table1_parametric.csv");

/// The shipped CSV sources, explicit rows first.
pub fn embedded_csv() -> (&'static str, &'static str) {
    (EXPLICIT_CSV, PARAMETRIC_CSV)
}

/// Largest `n` covered by explicit rows; larger `n` use the parametric rows.
pub const EXPLICIT_MAX_N: u64 = 12;

/// Upper end of the `n > 12` range checked by [`TableDataset::validate_all`].
pub const PARAMETRIC_CHECK_MAX_N: u64 = 40;

/// An `H` entry as printed in the table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TableH {
    Finite(u64),
    Infinite,
    /// The codimension function is not defined for this `(n, d)`.
    Dash,
}

impl TableH {
    pub fn matches(self, c: CodimResult) -> bool {
        matches!(
            (self, c),
            (TableH::Infinite, CodimResult::Infinite) | (TableH::Dash, CodimResult::NotApplicable)
        ) || matches!((self, c), (TableH::Finite(a), CodimResult::Finite(b)) if a == b)
    }
}

impl fmt::Display for TableH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableH::Finite(m) => write!(f, "{m}"),
            TableH::Infinite => f.write_str("inf"),
            TableH::Dash => f.write_str("-"),
        }
    }
}

impl FromStr for TableH {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim() {
            "inf" => Ok(TableH::Infinite),
            "-" => Ok(TableH::Dash),
            t => t
                .parse::<u64>()
                .map(TableH::Finite)
                .map_err(|_| format!("bad H value `{t}`")),
        }
    }
}

impl Serialize for TableH {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            TableH::Finite(m) => serializer.serialize_u64(*m),
            other => serializer.collect_str(other),
        }
    }
}

/// One table row, possibly instantiated from a parametric `n > 12` row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct McMullenCase {
    pub n: u64,
    pub k: u64,
    pub d: u64,
    pub r: u64,
    pub s: u64,
    #[serde(rename = "H")]
    pub h: TableH,
    pub parametric: bool,
    /// `k/d = 1/2`: the monodromy group is `Sp_2g(Z)` inside `U(g, g)`.
    pub symplectic: bool,
}

impl McMullenCase {
    pub fn label(&self) -> String {
        format!("n={} k/d={}/{}", self.n, self.k, self.d)
    }
}

/// A row valid for every `n > 12`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParametricRow {
    pub k: u64,
    pub d: u64,
    pub r_coeff: Rational,
    pub s_coeff: Rational,
    #[serde(rename = "H")]
    pub h: TableH,
}

impl ParametricRow {
    pub fn instantiate(&self, n: u64) -> McMullenCase {
        let nn = Rational::from_integer(n);
        let ceil_m1 = |c: &Rational| {
            (&nn * c - Rational::one())
                .ceil()
                .to_u64()
                .expect("signature entry out of range")
        };
        McMullenCase {
            n,
            k: self.k,
            d: self.d,
            r: ceil_m1(&self.r_coeff),
            s: ceil_m1(&self.s_coeff),
            h: self.h,
            parametric: true,
            symplectic: 2 * self.k == self.d,
        }
    }
}

#[derive(Deserialize)]
struct ExplicitRecord {
    n: u64,
    k: u64,
    d: u64,
    r: u64,
    s: u64,
    #[serde(rename = "H")]
    h: String,
}

#[derive(Deserialize)]
struct ParametricRecord {
    k: u64,
    d: u64,
    r_coeff: String,
    s_coeff: String,
    #[serde(rename = "H")]
    h: String,
}

fn reader(text: &str) -> csv::Reader<&[u8]> {
    csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes())
}

fn table_err(line: usize, reason: impl Into<String>) -> ParseError {
    ParseError::Table {
        line,
        reason: reason.into(),
    }
}

fn record_line(pos: Option<&csv::Position>) -> usize {
    pos.map_or(0, |p| p.line() as usize)
}

fn check_ratio(k: u64, d: u64, line: usize) -> std::result::Result<(), ParseError> {
    if d < 2 || k == 0 || k >= d {
        return Err(table_err(
            line,
            format!("cover data {k}/{d} is not in (0, 1)"),
        ));
    }
    if k.gcd(&d) != 1 {
        return Err(table_err(
            line,
            format!("cover data {k}/{d} is not in lowest terms"),
        ));
    }
    Ok(())
}

/// The explicit and parametric rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableDataset {
    explicit: Vec<McMullenCase>,
    parametric: Vec<ParametricRow>,
}

/// A disagreement between a stored table entry and a recomputed value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub row: String,
    pub field: &'static str,
    pub stored: String,
    pub computed: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} stored {} but computed {}",
            self.row, self.field, self.stored, self.computed
        )
    }
}

impl TableDataset {
    /// The dataset compiled into the library.
    pub fn embedded() -> &'static TableDataset {
        static DATA: OnceLock<TableDataset> = OnceLock::new();
        DATA.get_or_init(|| {
            TableDataset::from_csv(EXPLICIT_CSV, PARAMETRIC_CSV)
                .expect("embedded table data is well formed")
        })
    }

    pub fn from_csv(explicit: &str, parametric: &str) -> Result<TableDataset> {
        let mut rows = Vec::new();
        let mut rdr = reader(explicit);
        let headers = rdr
            .headers()
            .map_err(|e| table_err(1, e.to_string()))?
            .clone();
        for raw in rdr.records() {
            let raw = raw.map_err(|e| table_err(record_line(e.position()), e.to_string()))?;
            let line = record_line(raw.position());
            let rec: ExplicitRecord = raw
                .deserialize(Some(&headers))
                .map_err(|e| table_err(line, e.to_string()))?;
            check_ratio(rec.k, rec.d, line)?;
            if rec.n < 5 || rec.n > EXPLICIT_MAX_N {
                return Err(table_err(
                    line,
                    format!("explicit rows need 5 <= n <= 12, got {}", rec.n),
                )
                .into());
            }
            if rec.r == 0 || rec.s == 0 {
                return Err(table_err(line, "signature entries must be positive").into());
            }
            let h = rec.h.parse::<TableH>().map_err(|e| table_err(line, e))?;
            if rows
                .iter()
                .any(|c: &McMullenCase| (c.n, c.k, c.d) == (rec.n, rec.k, rec.d))
            {
                return Err(table_err(line, "duplicate row").into());
            }
            rows.push(McMullenCase {
                n: rec.n,
                k: rec.k,
                d: rec.d,
                r: rec.r,
                s: rec.s,
                h,
                parametric: false,
                symplectic: 2 * rec.k == rec.d,
            });
        }

        let mut params = Vec::new();
        let mut rdr = reader(parametric);
        let headers = rdr
            .headers()
            .map_err(|e| table_err(1, e.to_string()))?
            .clone();
        for raw in rdr.records() {
            let raw = raw.map_err(|e| table_err(record_line(e.position()), e.to_string()))?;
            let line = record_line(raw.position());
            let rec: ParametricRecord = raw
                .deserialize(Some(&headers))
                .map_err(|e| table_err(line, e.to_string()))?;
            check_ratio(rec.k, rec.d, line)?;
            let coeff = |s: &str| {
                s.parse::<Rational>()
                    .map_err(|e| table_err(line, e.to_string()))
            };
            let r_coeff = coeff(&rec.r_coeff)?;
            let s_coeff = coeff(&rec.s_coeff)?;
            if !r_coeff.is_positive() || !s_coeff.is_positive() {
                return Err(table_err(line, "signature coefficients must be positive").into());
            }
            let h = rec.h.parse::<TableH>().map_err(|e| table_err(line, e))?;
            params.push(ParametricRow {
                k: rec.k,
                d: rec.d,
                r_coeff,
                s_coeff,
                h,
            });
        }
        Ok(TableDataset {
            explicit: rows,
            parametric: params,
        })
    }

    pub fn explicit_rows(&self) -> &[McMullenCase] {
        &self.explicit
    }

    pub fn parametric_rows(&self) -> &[ParametricRow] {
        &self.parametric
    }

    /// The row for `n` points and cover data `k/d` (reduced before lookup).
    pub fn lookup(&self, n: u64, k: u64, d: u64) -> Option<McMullenCase> {
        if d == 0 || k == 0 || k >= d || n < 5 {
            return None;
        }
        let g = k.gcd(&d);
        let (k, d) = (k / g, d / g);
        if n <= EXPLICIT_MAX_N {
            self.explicit
                .iter()
                .find(|c| (c.n, c.k, c.d) == (n, k, d))
                .cloned()
        } else {
            self.parametric
                .iter()
                .find(|p| (p.k, p.d) == (k, d))
                .map(|p| p.instantiate(n))
        }
    }

    /// Whether `(n, k/d)` or its conjugate `(n, (d-k)/d)` is listed.
    pub fn is_discrete(&self, n: u64, k: u64, d: u64) -> bool {
        if d < 2 {
            return false;
        }
        let k = k % d;
        k != 0 && (self.lookup(n, k, d).is_some() || self.lookup(n, d - k, d).is_some())
    }

    /// Recomputes the signature and both routes to `H` for every explicit
    /// row, and for each parametric row at `13 <= n <= 40`. For parametric
    /// rows `H` is only compared where the cover regime applies.
    pub fn validate_all(&self) -> Vec<Mismatch> {
        let mut out = Vec::new();
        for row in &self.explicit {
            check_row(row, true, &mut out);
        }
        for p in &self.parametric {
            for n in EXPLICIT_MAX_N + 1..=PARAMETRIC_CHECK_MAX_N {
                let row = p.instantiate(n);
                let applicable = crate::cover::Regime::of(n, row.d).is_admissible();
                check_row(&row, applicable, &mut out);
            }
        }
        out
    }
}

type CodimFn = fn(u64, u64, u64) -> Result<CodimResult>;

fn check_row(row: &McMullenCase, check_h: bool, out: &mut Vec<Mismatch>) {
    let label = row.label();
    let cover = match CoverData::new(row.n, row.d, row.k as i64) {
        Ok(c) => c,
        Err(e) => {
            out.push(Mismatch {
                row: label,
                field: "cover data",
                stored: format!("{}/{}", row.k, row.d),
                computed: e.to_string(),
            });
            return;
        }
    };
    let sig = signature(&cover);
    if sig != (row.r, row.s) {
        out.push(Mismatch {
            row: label.clone(),
            field: "(r,s)",
            stored: format!("({},{})", row.r, row.s),
            computed: format!("({},{})", sig.0, sig.1),
        });
    }
    if !check_h {
        return;
    }
    let routes: [(&'static str, CodimFn); 2] = [
        ("H (closed form)", codim_h_closed),
        ("H (search)", codim_h_oracle),
    ];
    for (field, route) in routes {
        let computed = match route(row.n, row.d, row.k) {
            Ok(c) => c,
            Err(e) => {
                out.push(Mismatch {
                    row: label.clone(),
                    field,
                    stored: row.h.to_string(),
                    computed: e.to_string(),
                });
                continue;
            }
        };
        if !row.h.matches(computed) {
            out.push(Mismatch {
                row: label.clone(),
                field,
                stored: row.h.to_string(),
                computed: computed.to_string(),
            });
        }
    }
}

pub fn lookup(n: u64, k: u64, d: u64) -> Option<McMullenCase> {
    TableDataset::embedded().lookup(n, k, d)
}

pub fn is_discrete(n: u64, k: u64, d: u64) -> bool {
    TableDataset::embedded().is_discrete(n, k, d)
}

pub fn validate_all() -> Vec<Mismatch> {
    TableDataset::embedded().validate_all()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_loads() {
        let t = TableDataset::embedded();
        assert_eq!(t.explicit_rows().len(), 49);
        assert_eq!(t.parametric_rows().len(), 4);
    }

    #[test]
    fn lookup_examples() {
        let row = lookup(8, 1, 4).unwrap();
        assert_eq!((row.r, row.s, row.h), (1, 5, TableH::Finite(5)));
        let row = lookup(7, 1, 2).unwrap();
        assert_eq!((row.r, row.s, row.h), (3, 3, TableH::Dash));
        assert!(row.symplectic);
        assert_eq!(lookup(6, 1, 5), None);
        // unreduced ratios are normalized
        assert_eq!(lookup(8, 2, 8), lookup(8, 1, 4));
    }

    #[test]
    fn parametric_lookup() {
        let row = lookup(18, 1, 6).unwrap();
        assert!(row.parametric);
        assert_eq!((row.r, row.s, row.h), (2, 14, TableH::Finite(5)));
        assert_eq!(lookup(13, 3, 8), None);
    }

    #[test]
    fn discreteness_examples() {
        assert!(is_discrete(14, 1, 2));
        assert!(is_discrete(5, 3, 4));
        assert!(!is_discrete(13, 1, 5));
        assert!(!is_discrete(4, 1, 2));
    }

    #[test]
    fn conjugate_closure() {
        for n in 5..=30 {
            for d in 2..=13 {
                for k in 1..d {
                    assert_eq!(is_discrete(n, k, d), is_discrete(n, d - k, d));
                }
            }
        }
    }

    #[test]
    fn pristine_table_validates() {
        let m = validate_all();
        assert!(m.is_empty(), "{m:#?}");
    }

    #[test]
    fn row_12_one_sixth() {
        let row = lookup(12, 1, 6).unwrap();
        assert_eq!(row.h, TableH::Finite(9));
        assert_eq!(codim_h_closed(12, 6, 1).unwrap(), CodimResult::Finite(9));
        assert_eq!(codim_h_oracle(12, 6, 1).unwrap(), CodimResult::Finite(9));
    }

    #[test]
    fn corrupted_row_is_reported() {
        let bad = EXPLICIT_CSV.replace("8,1,4,1,5,5", "8,1,4,2,5,5");
        let t = TableDataset::from_csv(&bad, PARAMETRIC_CSV).unwrap();
        let m = t.validate_all();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].row, "n=8 k/d=1/4");
        assert_eq!(m[0].field, "(r,s)");
        assert!(m[0].to_string().contains("n=8 k/d=1/4"));
    }

    #[test]
    fn corrupted_h_is_reported_by_both_routes() {
        let bad = EXPLICIT_CSV.replace("12,5,12,4,6,inf", "12,5,12,4,6,3");
        let t = TableDataset::from_csv(&bad, PARAMETRIC_CSV).unwrap();
        let fields: Vec<_> = t.validate_all().iter().map(|m| m.field).collect();
        assert_eq!(fields, vec!["H (closed form)", "H (search)"]);
    }

    #[test]
    fn malformed_rows_rejected() {
        let header = "n,k,d,r,s,H\n";
        for body in [
            "8,2,4,1,5,5",              // not lowest terms
            "8,1,4,0,5,5",              // r = 0
            "8,1,4,1,5,x",              // bad H
            "8,1,4,1,5",                // missing column
            "4,1,2,1,1,-",              // n out of range
            "8,5,4,1,5,5",              // k >= d
            "8,1,4,1,5,5\n8,1,4,1,5,5", // duplicate
        ] {
            let text = format!("{header}{body}\n");
            assert!(
                TableDataset::from_csv(&text, PARAMETRIC_CSV).is_err(),
                "{body}"
            );
        }
        assert!(
            TableDataset::from_csv(EXPLICIT_CSV, "k,d,r_coeff,s_coeff,H\n1,6,x,5/6,5\n").is_err()
        );
    }
}
