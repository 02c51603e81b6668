//! Seeded random polynomials, matrices and control problems for the test
//! suites. Everything is reproducible from the seed.

use bsynth_core::{Behavior, ControlProblem, Poly, PolyMatrix, Rational};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Gen {
    rng: ChaCha8Rng,
}

pub fn names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

impl Gen {
    pub fn new(seed: u64) -> Self {
        Gen {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    /// Integer coefficients in `-2..=2`; may be zero.
    pub fn poly(&mut self, max_deg: usize) -> Poly {
        let deg = self.rng.gen_range(0..=max_deg);
        let coeffs: Vec<i64> = (0..=deg).map(|_| self.rng.gen_range(-2..=2)).collect();
        Poly::from_ints(&coeffs)
    }

    pub fn nonzero_poly(&mut self, max_deg: usize) -> Poly {
        loop {
            let p = self.poly(max_deg);
            if !p.is_zero() {
                return p;
            }
        }
    }

    /// Entries are zero with probability `sparsity`.
    pub fn matrix_sparse(
        &mut self,
        rows: usize,
        cols: usize,
        max_deg: usize,
        sparsity: f64,
    ) -> PolyMatrix {
        PolyMatrix::from_fn(rows, cols, |_, _| {
            if self.rng.gen_bool(sparsity) {
                Poly::zero()
            } else {
                self.poly(max_deg)
            }
        })
    }

    pub fn matrix(&mut self, rows: usize, cols: usize, max_deg: usize) -> PolyMatrix {
        self.matrix_sparse(rows, cols, max_deg, 0.25)
    }

    pub fn full_row_rank(&mut self, rows: usize, cols: usize, max_deg: usize) -> PolyMatrix {
        assert!(rows <= cols);
        loop {
            let m = self.matrix(rows, cols, max_deg);
            if m.rank() == rows {
                return m;
            }
        }
    }

    /// Product of random elementary operations: row additions with
    /// polynomial multipliers, swaps, and nonzero constant scalings.
    pub fn unimodular(&mut self, n: usize, steps: usize, max_deg: usize) -> PolyMatrix {
        let mut u = PolyMatrix::identity(n);
        if n == 0 {
            return u;
        }
        for _ in 0..steps {
            match self.rng.gen_range(0..6) {
                0 if n > 1 => {
                    let (i, j) = self.two_indices(n);
                    u.swap_rows(i, j);
                }
                1 => {
                    let i = self.rng.gen_range(0..n);
                    let c = *[-1i64, 2, -2].choose(&mut self.rng).unwrap();
                    u.scale_row(i, &Rational::from_integer(c.into()));
                }
                _ if n > 1 => {
                    let (i, j) = self.two_indices(n);
                    let k = self.nonzero_poly(max_deg);
                    u.add_row_multiple(i, j, &k);
                }
                _ => {}
            }
        }
        u
    }

    fn two_indices(&mut self, n: usize) -> (usize, usize) {
        let i = self.rng.gen_range(0..n);
        let mut j = self.rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        (i, j)
    }

    /// A plant and a specification obtained as the behavior controlled by
    /// a random controller, hence implementable. Regular implementability
    /// varies.
    pub fn implementable_problem(&mut self) -> ControlProblem {
        let nw = self.range(1, 2);
        let nc = self.range(1, 3);
        let p = self.range(1, 3);
        let r = if self.chance(0.5) && p > 1 {
            // rank-deficient R leaves a nontrivial control manifest
            let k = self.range(1, nw.min(p - 1));
            &self.matrix(p, k, 1) * &self.full_row_rank(k, nw, 1)
        } else {
            self.matrix(p, nw, 1)
        };
        let m = self.matrix(p, nc, 1);
        let ctrl_rows = self.range(0, nc);
        let ctrl = self.matrix(ctrl_rows, nc, 1);
        let draft = ControlProblem::new(
            r.clone(),
            m.clone(),
            PolyMatrix::zeros(0, nw),
            names("w", nw),
            names("c", nc),
            vec![],
        )
        .expect("consistent shapes");
        let c = Behavior::new(ctrl, names("c", nc)).expect("consistent shapes");
        let spec = draft
            .controlled_behavior(&c)
            .and_then(|k| k.minimal_rep())
            .expect("small instance");
        ControlProblem::new(
            r,
            m,
            spec.into_rep(),
            names("w", nw),
            names("c", nc),
            vec![],
        )
        .expect("consistent shapes")
    }

    /// `w1 = c1` with `a(d/dt) c1 = 0` and spec `w1 = 0`: implementable
    /// but not regularly implementable for any nonconstant `a`. Disguised
    /// by a unimodular row mix and optional free extra variables.
    pub fn non_regular_problem(&mut self) -> ControlProblem {
        let extra_w = self.range(0, 1);
        let extra_c = self.range(0, 1);
        let nw = 1 + extra_w;
        let nc = 1 + extra_c;
        let a = loop {
            let a = self.nonzero_poly(2);
            if a.degree().unwrap_or(0) >= 1 {
                break a;
            }
        };
        let mut r = PolyMatrix::zeros(2, nw);
        let mut m = PolyMatrix::zeros(2, nc);
        r[(0, 0)] = Poly::one();
        m[(0, 0)] = -Poly::one();
        m[(1, 0)] = a;
        if extra_w == 1 {
            // w2 follows c1 loosely: w2 - k·w1 = 0 keeps everything autonomous
            let k = self.poly(1);
            r = r.vstack(&PolyMatrix::from_rows(vec![vec![-k, Poly::one()]], 2));
            m = m.vstack(&PolyMatrix::zeros(1, nc));
        }
        let u = self.unimodular(r.rows(), 4, 1);
        let r = &u * &r;
        let m = &u * &m;
        let mut s = PolyMatrix::identity(nw);
        if nw > 1 && self.chance(0.5) {
            s.add_row_multiple(1, 0, &self.poly(1));
        }
        ControlProblem::new(r, m, s, names("w", nw), names("c", nc), vec![])
            .expect("consistent shapes")
    }

    /// A plant with a random specification that is usually not inside the
    /// manifest behavior.
    pub fn arbitrary_problem(&mut self) -> ControlProblem {
        let nw = self.range(1, 2);
        let nc = self.range(1, 2);
        let p = self.range(1, 2);
        let r = self.matrix(p, nw, 1);
        let m = self.matrix(p, nc, 1);
        let srows = self.range(1, nw);
        let s = self.matrix(srows, nw, 1);
        ControlProblem::new(r, m, s, names("w", nw), names("c", nc), vec![])
            .expect("consistent shapes")
    }

    /// Cycles through the three problem families.
    pub fn problem_mix(&mut self, i: usize) -> ControlProblem {
        match i % 4 {
            0 | 1 => self.implementable_problem(),
            2 => self.non_regular_problem(),
            _ => self.arbitrary_problem(),
        }
    }

    /// Full-row-rank `C` (`≤ 2` rows) and `P` over `≤ 4` columns of degree
    /// `≤ 2`. Half the instances hide planted zero columns behind a random
    /// `V0`, so that nullification has something to find.
    pub fn nullify_instance(&mut self) -> (PolyMatrix, PolyMatrix) {
        let cols = self.range(1, 4);
        let q = self.range(1, cols.min(2));
        let r = self.range(0, cols.min(2));
        let p = if r == 0 {
            PolyMatrix::zeros(0, cols)
        } else {
            self.full_row_rank(r, cols, 2)
        };
        loop {
            let c = if self.chance(0.5) {
                let mut z = self.matrix(q, cols, 2);
                for j in 0..cols {
                    if self.chance(0.5) {
                        for i in 0..q {
                            z[(i, j)] = Poly::zero();
                        }
                    }
                }
                let v0 = self.matrix(q, r, 1);
                &z + &(&v0 * &p)
            } else {
                self.matrix(q, cols, 2)
            };
            if c.rank() == q {
                return (c, p);
            }
        }
    }

    /// `(C, P)` with `rank [P; C] ≥ rows(C)` when `feasible`, and strictly
    /// below otherwise. At most 3 columns.
    pub fn fullrank_instance(&mut self, feasible: bool) -> (PolyMatrix, PolyMatrix) {
        loop {
            let cols = self.range(1, 3);
            let (c, p) = if feasible {
                // often rank-deficient: rows drawn from a smaller span
                let q = self.range(1, 2);
                let k = self.range(1, q);
                let c = &self.matrix(q, k, 1) * &self.matrix(k, cols, 1);
                let r = self.range(0, cols);
                (c, self.matrix(r, cols, 1))
            } else {
                // every row of C and P is a multiple of one base row
                let q = self.range(2, 3);
                let base = self.matrix(1, cols, 1);
                let c = &self.matrix(q, 1, 1) * &base;
                let r = self.range(0, 2);
                let p = &self.matrix(r, 1, 1) * &base;
                (c, p)
            };
            if (p.vstack(&c).rank() >= c.rows()) == feasible {
                return (c, p);
            }
        }
    }
}
