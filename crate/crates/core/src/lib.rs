//! Exact arithmetic for total I'-curvatures of circle bundles over complete
//! intersections, and randomized checks of the identities behind them.

/// Implements `+ - * neg` for owned values and references on top of the
/// inherent `add_ref`, `sub_ref`, `mul_ref`, `neg_ref` methods.
#[macro_export]
#[doc(hidden)]
macro_rules! impl_ring_ops {
    ([$($gen:tt)*] $ty:ty) => {
        impl<$($gen)*> ::std::ops::Add for $ty {
            type Output = Self;
            fn add(self, rhs: Self) -> Self { self.add_ref(&rhs) }
        }
        impl<'a, $($gen)*> ::std::ops::Add<&'a $ty> for &'a $ty {
            type Output = $ty;
            fn add(self, rhs: Self) -> $ty { self.add_ref(rhs) }
        }
        impl<$($gen)*> ::std::ops::Sub for $ty {
            type Output = Self;
            fn sub(self, rhs: Self) -> Self { self.sub_ref(&rhs) }
        }
        impl<'a, $($gen)*> ::std::ops::Sub<&'a $ty> for &'a $ty {
            type Output = $ty;
            fn sub(self, rhs: Self) -> $ty { self.sub_ref(rhs) }
        }
        impl<$($gen)*> ::std::ops::Mul for $ty {
            type Output = Self;
            fn mul(self, rhs: Self) -> Self { self.mul_ref(&rhs) }
        }
        impl<'a, $($gen)*> ::std::ops::Mul<&'a $ty> for &'a $ty {
            type Output = $ty;
            fn mul(self, rhs: Self) -> $ty { self.mul_ref(rhs) }
        }
        impl<$($gen)*> ::std::ops::Neg for $ty {
            type Output = Self;
            fn neg(self) -> Self { self.neg_ref() }
        }
        impl<'a, $($gen)*> ::std::ops::Neg for &'a $ty {
            type Output = $ty;
            fn neg(self) -> $ty { self.neg_ref() }
        }
    };
}

pub mod arith;
pub mod ci;
pub mod invariant;
pub mod lefschetz;
pub mod symmetric;
pub mod tractor;
pub mod verify;
