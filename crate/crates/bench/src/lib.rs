//! Benchmark helpers: canonical inputs the benches share.

use tinytopos_core::order::{enumerate_downsets, named_poset, Heyting, Poset};

/// The powerset-of-three-elements poset, eight elements under inclusion.
pub fn powerset3() -> Poset {
    named_poset("powerset:3")
        .expect("valid spec")
        .expect("built-in")
}

/// Its twenty-element downset algebra.
pub fn crible_algebra() -> Heyting {
    enumerate_downsets(&powerset3()).expect("within limits")
}
