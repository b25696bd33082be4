//! What is known about parameters: the unipotent label table, classical
//! group families, unitary principal series and exceptional-group cases.

pub mod cases;
pub mod classical;
pub mod table;
pub mod unitary;

pub use cases::{case_conformance, case_db, case_lookup, parse_levi, CaseRecord, OrbitParams};
pub use classical::{
    classical_bound_check, classical_labels, parity_rule, type_a_check, CaseTag, ClassicalFamily,
    GroupFamily, Parity, TypeAData,
};
pub use table::{
    conforms_to_table1, match_label_function, reduced_match, table1, table1_match, Table1Labels, Table1Match,
    Table1Row,
};
pub use unitary::{quasisplit_ps_q, u3_outcomes, unitary_ps_descriptor, ClassTag, UnitarySignature};
