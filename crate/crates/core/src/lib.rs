//! Exact computation of the lower global (canonical) basis of irreducible
//! `U_q(sp_2n)`-modules, expanded on the natural tabloid basis of the
//! ambient module `W(lambda)`, with all arithmetic in `Z[q, q^-1]`.

pub mod canonical;
pub mod column;
pub mod error;
pub mod fundamental;
pub mod laurent;
pub mod letter;
pub mod tabloid;
pub mod relations;
pub mod weight;
pub mod wmodule;
pub mod words;

pub use column::{enumerate_columns, parse_column, Admissibility, Column};
pub use error::{Error, Result};
pub use laurent::{quantum_factorial, quantum_int, LaurentPoly};
pub use letter::Letter;
pub use tabloid::{enumerate_tabloids, lex_compare, parse_tabloid, Shape, Tabloid};
pub use weight::Weight;
pub use words::{connected_component, e_tilde, epsilon, f_tilde, phi, Word};
