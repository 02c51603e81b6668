//! Degree cap on intermediate results of the normal-form routines.
//!
//! The cap is per thread. [`with_degree_cap`] scopes an override and
//! restores the previous value afterwards, so concurrent callers never see
//! each other's settings.

use std::cell::Cell;

use super::PolyMatrix;
use crate::error::{Error, Result};

pub const DEFAULT_DEGREE_CAP: usize = 64;

thread_local! {
    static CAP: Cell<usize> = const { Cell::new(DEFAULT_DEGREE_CAP) };
}

pub fn degree_cap() -> usize {
    CAP.with(Cell::get)
}

/// Runs `f` with the degree cap set to `cap` on the current thread.
pub fn with_degree_cap<R>(cap: usize, f: impl FnOnce() -> R) -> R {
    struct Restore(usize);
    impl Drop for Restore {
        fn drop(&mut self) {
            CAP.with(|c| c.set(self.0));
        }
    }
    let _restore = Restore(CAP.with(|c| c.replace(cap)));
    f()
}

pub(crate) fn check_degree(m: &PolyMatrix) -> Result<()> {
    let cap = degree_cap();
    match m.max_degree() {
        Some(degree) if degree > cap => Err(Error::DegreeCap { degree, cap }),
        _ => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scoped_override_restores() {
        assert_eq!(degree_cap(), DEFAULT_DEGREE_CAP);
        with_degree_cap(3, || {
            assert_eq!(degree_cap(), 3);
            with_degree_cap(1, || assert_eq!(degree_cap(), 1));
            assert_eq!(degree_cap(), 3);
        });
        assert_eq!(degree_cap(), DEFAULT_DEGREE_CAP);
    }
}
