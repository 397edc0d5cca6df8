//! Exact linear algebra over the integers and over finite fields.

pub mod field;
pub mod fpmat;
pub mod intmat;

pub use field::{is_prime, Elem, Field};
pub use fpmat::{Echelon, FpMatrix, RowSpace};
pub use intmat::{lattice_quotient, rank_q, smith_normal_form, sublattice_index, AbelianInvariants, IntMatrix, SmithForm};

/// Right kernel of `a`, as the rows of a matrix in reduced row echelon form.
pub fn kernel_fp(a: &FpMatrix) -> FpMatrix {
    a.kernel()
}

pub fn rank_fp(a: &FpMatrix) -> usize {
    a.rank()
}
