//! Transcribed tables and cellwise regeneration diffs.

use crate::error::MagmaError;
use crate::magma::Magma;
use crate::serial::from_text;

use super::source::Source;
use super::HarnessError;

pub struct Fixture {
    pub id: &'static str,
    pub n: u64,
    pub m: u64,
    pub doubled: bool,
    pub text: &'static str,
}

pub const FIXTURES: [Fixture; 6] = [
    Fixture { id: "L5(2)", n: 5, m: 2, doubled: false, text: include_str!("../../fixtures/l5_2.magma") },
    Fixture { id: "L5(3)", n: 5, m: 3, doubled: false, text: include_str!("../../fixtures/l5_3.magma") },
    Fixture { id: "L5(4)", n: 5, m: 4, doubled: false, text: include_str!("../../fixtures/l5_4.magma") },
    Fixture { id: "L7(4)", n: 7, m: 4, doubled: false, text: include_str!("../../fixtures/l7_4.magma") },
    Fixture { id: "L7(3)", n: 7, m: 3, doubled: false, text: include_str!("../../fixtures/l7_3.magma") },
    Fixture { id: "N(L5(2))", n: 5, m: 2, doubled: true, text: include_str!("../../fixtures/n_l5_2.magma") },
];

/// Known transcription slips: (table, row, column, transcribed value).
pub const ERRATA: [(&str, &str, &str, &str); 2] = [("N(L5(2))", "1", "3I", "2I"), ("N(L5(2))", "1I", "e", "1")];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellMismatch {
    pub row: String,
    pub col: String,
    pub generated: String,
    pub transcribed: String,
    pub documented: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableDiff {
    pub name: String,
    pub mismatches: Vec<CellMismatch>,
}

impl TableDiff {
    pub fn is_empty(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn unexpected(&self) -> impl Iterator<Item = &CellMismatch> {
        self.mismatches.iter().filter(|c| !c.documented)
    }
}

pub fn fixture(id: &str) -> Result<&'static Fixture, HarnessError> {
    FIXTURES.iter().find(|f| f.id == id).ok_or_else(|| HarnessError::MissingFixture(id.to_string()))
}

pub fn transcribed(id: &str) -> Result<Magma, HarnessError> {
    Ok(from_text(fixture(id)?.text)?)
}

/// Cellwise diff; labels must agree in order.
pub fn diff_tables(id: &str, generated: &Magma, written: &Magma) -> Result<TableDiff, HarnessError> {
    if generated.labels() != written.labels() {
        return Err(HarnessError::Magma(MagmaError::Parse { line: 2, msg: format!("{id}: label rows differ") }));
    }
    let k = generated.order();
    let mut mismatches = Vec::new();
    for a in 0..k {
        for b in 0..k {
            let (g, w) = (generated.op(a, b), written.op(a, b));
            if g != w {
                let (row, col, tr) = (generated.label(a), generated.label(b), written.label(w));
                let documented = ERRATA.iter().any(|&(t, r, c, v)| t == id && r == row && c == col && v == tr);
                mismatches.push(CellMismatch {
                    row: row.into(),
                    col: col.into(),
                    generated: generated.label(g).into(),
                    transcribed: tr.into(),
                    documented,
                });
            }
        }
    }
    Ok(TableDiff { name: id.to_string(), mismatches })
}

pub fn regenerate_and_diff_with(src: &dyn Source, id: &str) -> Result<TableDiff, HarnessError> {
    let f = fixture(id)?;
    let generated = if f.doubled { src.doubled(f.n, f.m)? } else { src.loop_ln(f.n, f.m)? };
    diff_tables(id, &generated, &transcribed(id)?)
}

pub fn regenerate_and_diff(id: &str) -> Result<TableDiff, HarnessError> {
    regenerate_and_diff_with(&super::source::Library, id)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_tables_match() {
        for f in FIXTURES.iter().filter(|f| !f.doubled) {
            assert!(regenerate_and_diff(f.id).unwrap().is_empty(), "{}", f.id);
        }
    }

    #[test]
    fn doubled_table_differs_only_by_errata() {
        let d = regenerate_and_diff("N(L5(2))").unwrap();
        assert_eq!(d.mismatches.len(), 2);
        assert_eq!(d.unexpected().count(), 0);
        let first = &d.mismatches[0];
        assert_eq!((first.row.as_str(), first.col.as_str(), first.generated.as_str()), ("1", "3I", "5I"));
    }

    #[test]
    fn missing_fixture() {
        assert!(matches!(regenerate_and_diff("L9(2)"), Err(HarnessError::MissingFixture(_))));
    }
}
