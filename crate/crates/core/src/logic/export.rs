use super::cnf::{Cnf, VarIndex};
use super::syntax::Program;

/// DIMACS CNF text and the variable numbering used to produce it.
///
/// Variables are numbered `1..=n` over the sorted signature, announced by
/// `c var <i> = <name>` comment lines ahead of the `p cnf` header. Each clause
/// `h1 ∨ … ∨ hm ← l1, …, ln` becomes one line `h1 … hm ¬l1 … ¬ln 0`.
pub fn export_dimacs(program: &Program) -> (String, VarIndex) {
    let vars = VarIndex::new(program.signature());
    let cnf = Cnf::from_program(program, &vars);
    let mut out = String::new();
    for (index, atom) in vars.iter() {
        out.push_str(&format!("c var {index} = {}\n", atom.export_name()));
    }
    out.push_str(&format!("p cnf {} {}\n", cnf.num_vars, cnf.clauses.len()));
    for clause in &cnf.clauses {
        for lit in clause {
            out.push_str(&lit.to_string());
            out.push(' ');
        }
        out.push_str("0\n");
    }
    (out, vars)
}

/// DLV-style program text: `a v b :- c, not d.`, one clause per line.
pub fn export_asp(program: &Program) -> String {
    program.to_string()
}
