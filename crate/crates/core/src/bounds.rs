//! Closed-form lower and upper bounds for the (pseudo-)Grundy index of the
//! complete geometric graph under each criterion.
//!
//! Fractional formulas are exposed as exact rationals; integer comparisons
//! round in the safe direction (lower bounds up, upper bounds down).

use num_rational::Rational64;

use crate::conflict::Criterion;
use crate::constructions::largest_power_of_two_at_most;
use crate::designs::LeaveKind;

/// Point-set regime a bound applies to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Setting {
    Convex,
    General,
}

impl std::fmt::Display for Setting {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Setting::Convex => "convex",
            Setting::General => "general",
        })
    }
}

fn binom2(x: i128) -> i128 {
    if x < 2 {
        0
    } else {
        x * (x - 1) / 2
    }
}

fn binom4(n: i128) -> i128 {
    if n < 4 {
        0
    } else {
        n * (n - 1) * (n - 2) * (n - 3) / 24
    }
}

/// Incidence budget of the convex complete graph: `m` endpoint incidences
/// and `cr` interior crossings available to a complete coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IncidenceBudget {
    pub n: usize,
    pub criterion: Criterion,
    /// Adjacent pairs meeting at a shared endpoint.
    pub m: u128,
    /// Adjacent pairs meeting at an interior crossing (convex position).
    pub cr: u128,
}

impl IncidenceBudget {
    pub fn convex(n: usize, criterion: Criterion) -> Self {
        let ni = n as i128;
        let m = match criterion {
            Criterion::Intersection => ni * binom2(ni - 1),
            Criterion::Crossing => 0,
            _ => panic!("incidence budget applies to crossing/intersection"),
        };
        IncidenceBudget {
            n,
            criterion,
            m: m as u128,
            cr: binom4(ni) as u128,
        }
    }

    pub fn total(&self) -> u128 {
        self.m + self.cr
    }
}

/// Rectilinear local crossing number of `K_n`, closed form with the two
/// exceptional values at `n = 8` and `n = 14`.
pub fn lcr_formula(n: usize) -> usize {
    assert!(n >= 3);
    match n {
        8 => return 4,
        14 => return 15,
        _ => {}
    }
    match n % 3 {
        0 => (n - 3) * (n - 3) / 9,
        1 => (n - 1) * (n - 4) / 9,
        2 => (n - 2) * (n - 2) / 9 - (n - 2) / 6,
        _ => unreachable!(),
    }
}

/// Counting upper bound on the number of colors of any coloring with the
/// downward-witness property.
///
/// Crossing/intersection (convex position): the largest `gamma` whose
/// incidence demand `C(gamma,2) + C(gamma-n,2)` fits the criterion's
/// budget (`cr`, respectively `m + cr`), allowing `n` singleton classes.
/// Disjointness: pair up everything beyond `n/2` singletons. Non-crossing:
/// same with `3n - 6` singletons.
pub fn counting_upper_bound(n: usize, c: Criterion) -> usize {
    assert!(n >= 4);
    let ni = n as i128;
    match c {
        Criterion::Crossing | Criterion::Intersection => {
            let budget = IncidenceBudget::convex(n, c).total() as i128;
            let mut gamma = 1i128;
            while binom2(gamma + 1) + binom2(gamma + 1 - ni) <= budget {
                gamma += 1;
            }
            gamma as usize
        }
        Criterion::Disjointness => {
            let singles = n / 2;
            (n * (n - 1) / 2 - singles) / 2 + singles
        }
        Criterion::NonCrossing => {
            let singles = 3 * n - 6;
            (n * (n - 1) / 2 - singles) / 2 + singles
        }
    }
}

/// The constructions' lower bounds as exact rationals.
pub fn lower_bound_formula(n: usize, c: Criterion, setting: Setting) -> Rational64 {
    assert!(n >= 4);
    let ni = n as i64;
    match (c, setting) {
        (Criterion::Intersection, Setting::Convex) => {
            Rational64::new(ni * ni, 8) + Rational64::new(ni, 4)
        }
        (Criterion::Crossing, Setting::Convex) => {
            let m = largest_power_of_two_at_most(n) as i64;
            Rational64::new(m * m - 16, 12)
        }
        (Criterion::Crossing | Criterion::Intersection, Setting::General) => {
            Rational64::from_integer(ni * ni / 400)
        }
        (Criterion::Disjointness, _) => Rational64::new((ni - 3) * (ni - 1), 8),
        (Criterion::NonCrossing, _) => {
            let num = match LeaveKind::for_n(n) {
                LeaveKind::Empty => ni * (ni - 1),
                LeaveKind::PerfectMatching => ni * (ni + 1),
                LeaveKind::Tripole => ni * ni + ni + 4,
                LeaveKind::FourCycle => ni * ni - ni + 16,
            };
            Rational64::new(num, 6)
        }
    }
}

/// Ceiling of a rational, for comparing achieved color counts to a lower
/// bound.
pub fn ceil_rational(r: Rational64) -> i64 {
    r.ceil().to_integer()
}

/// Exact text form: plain integer when possible, `p/q` otherwise.
pub fn format_exact(r: Rational64) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
