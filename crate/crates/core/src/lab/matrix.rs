//! Verdict tables over several operators and postulates.

use serde_json::{json, Value};

use crate::change::ChangeOperator;
use crate::logic::Signature;

use super::catalog::PostulateId;
use super::check::{check_with_table, PostulateVerdict, Scope};
use super::semantics::Tabled;
use super::LabError;

#[derive(Clone, Debug)]
pub struct Matrix {
    pub operators: Vec<String>,
    pub postulates: Vec<PostulateId>,
    /// `cells[i][j]` is the verdict of operator `i` on postulate `j`, or
    /// `None` when their flavors differ.
    pub cells: Vec<Vec<Option<PostulateVerdict>>>,
}

impl Matrix {
    pub fn cell(&self, operator: &str, postulate: PostulateId) -> Option<&PostulateVerdict> {
        let i = self.operators.iter().position(|o| o == operator)?;
        let j = self.postulates.iter().position(|&p| p == postulate)?;
        self.cells[i][j].as_ref()
    }

    /// Plain-text table with one row per operator.
    pub fn render(&self) -> String {
        let name_width = self.operators.iter().map(String::len).max().unwrap_or(0);
        let widths: Vec<usize> = self.postulates.iter().map(|p| p.name().len().max(5)).collect();
        let mut out = format!("{:name_width$}", "");
        for (p, w) in self.postulates.iter().zip(&widths) {
            out.push_str(&format!(" {:>w$}", p.name()));
        }
        out.push('\n');
        for (op, row) in self.operators.iter().zip(&self.cells) {
            out.push_str(&format!("{op:name_width$}"));
            for (cell, w) in row.iter().zip(&widths) {
                let text = match cell {
                    None => "-",
                    Some(v) if v.holds() => "holds",
                    Some(_) => "fails",
                };
                out.push_str(&format!(" {text:>w$}"));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .operators
            .iter()
            .zip(&self.cells)
            .map(|(op, row)| {
                let cells: serde_json::Map<String, Value> = self
                    .postulates
                    .iter()
                    .zip(row)
                    .map(|(p, c)| (p.name().to_string(), c.as_ref().map_or(Value::Null, |v| json!(v.status.as_str()))))
                    .collect();
                json!({ "operator": op, "verdicts": cells })
            })
            .collect();
        json!({ "rows": rows })
    }
}

/// Checks every postulate for every operator exhaustively. Cells whose
/// flavors differ are left empty.
pub fn equivalence_matrix(
    ops: &[&dyn ChangeOperator],
    ps: &[PostulateId],
    sig: &Signature,
) -> Result<Matrix, LabError> {
    Scope::exhaustive(sig.len()).validate()?;
    let mut cells = Vec::with_capacity(ops.len());
    for &op in ops {
        let table = Tabled::build(op, sig)?;
        let row = ps
            .iter()
            .map(|&p| {
                if p.flavor() == op.flavor() {
                    check_with_table(&table, op.name(), p).map(Some)
                } else {
                    Ok(None)
                }
            })
            .collect::<Result<Vec<_>, LabError>>()?;
        cells.push(row);
    }
    Ok(Matrix {
        operators: ops.iter().map(|o| o.name()).collect(),
        postulates: ps.to_vec(),
        cells,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::change::Strategy;

    #[test]
    fn natural_row() {
        let sig = Signature::with_size(2).unwrap();
        let ops: [&dyn ChangeOperator; 2] = [&Strategy::NaturalContraction, &Strategy::NaturalRevision];
        let m = equivalence_matrix(&ops, &[PostulateId::Insertion, PostulateId::Mc, PostulateId::R1], &sig).unwrap();
        assert!(m.cell("natural-contraction", PostulateId::Insertion).unwrap().holds());
        assert!(!m.cell("natural-contraction", PostulateId::Mc).unwrap().holds());
        assert!(m.cell("natural-contraction", PostulateId::R1).is_none());
        assert!(m.cell("natural-revision", PostulateId::R1).unwrap().holds());
        assert!(m.render().lines().count() == 3);
    }
}
