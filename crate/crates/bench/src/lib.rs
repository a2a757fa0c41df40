//! Fixtures shared by the benchmarks.

use hopfmin_core::datum::{preset_cartan, CartanType};
use hopfmin_core::{BraidingMatrix, Scalar};

/// Braiding of the quantum Borel datum of `ty` over `Q(t)`.
pub fn cartan_braiding(ty: CartanType) -> BraidingMatrix {
    preset_cartan(&ty.cartan_matrix(), &ty.symmetrizer(), &Scalar::t_pow(1))
        .expect("built-in type")
        .braiding_matrix()
        .clone()
}

/// Same braiding with `t` sent to a primitive `order`-th root of unity.
pub fn specialized_braiding(ty: CartanType, order: u32) -> BraidingMatrix {
    cartan_braiding(ty).specialize(order).expect("Cartan points have no poles")
}
