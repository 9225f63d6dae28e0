//! Prints the verdict of every built-in strategy on every catalog postulate
//! at signature size 2, followed by the theorem reports.

use belief_kernel::change::Strategy;
use belief_kernel::lab::{equivalence_matrix, verify_characterization, PostulateId, TheoremId};
use belief_kernel::{ChangeOperator, Signature};

fn main() {
    let sig = Signature::with_size(2).expect("size 2");
    let ops: Vec<&dyn ChangeOperator> = Strategy::ALL.iter().map(|s| s as &dyn ChangeOperator).collect();
    let matrix = equivalence_matrix(&ops, PostulateId::ALL, &sig).expect("matrix");
    for (op, row) in matrix.operators.iter().zip(&matrix.cells) {
        let mut holds = Vec::new();
        let mut fails = Vec::new();
        for (p, cell) in matrix.postulates.iter().zip(row) {
            match cell {
                Some(v) if v.holds() => holds.push(p.name()),
                Some(_) => fails.push(p.name()),
                None => {}
            }
        }
        println!("{op}\n  holds: {}\n  fails: {}", holds.join(" "), fails.join(" "));
    }
    for s in Strategy::CONTRACTIONS {
        for &t in TheoremId::ALL {
            match verify_characterization(&s, t, 2) {
                Ok(r) => {
                    let rels: Vec<String> = r
                        .relations
                        .iter()
                        .map(|rel| {
                            let v: Vec<&str> = rel.groups.iter().map(|g| if g.holds { "H" } else { "F" }).collect();
                            v.join("")
                        })
                        .collect();
                    println!("{} {t}: {} {}", s.short_name(), if r.pass { "PASS" } else { "FAIL" }, rels.join(" "));
                }
                Err(e) => println!("{} {t}: error {e}", s.short_name()),
            }
        }
    }
}
