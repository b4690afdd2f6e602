//! Lower bounds on `ψ_k`, the approximation-ratio bounds of each
//! algorithm, and checkers for the cover-counting identities. All arithmetic
//! is exact.

use alloc::format;

use num_rational::Ratio;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::verify::{profile_components, verify_cover, ComponentProfile, CoverSolution};

pub type Rational = Ratio<i64>;

fn r(num: usize, den: usize) -> Rational {
    Rational::new(num as i64, den as i64)
}

/// Smallest integer not below `x`.
pub fn ceil(x: Rational) -> i64 {
    x.ceil().to_integer()
}

pub fn to_f64(x: Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// `(d-k+2)/(2d-k+2) · n`, valid for `d`-regular graphs with `d >= k-1`.
pub fn lb_regular(n: usize, d: usize, k: usize) -> Result<Rational> {
    if k < 2 || d + 1 < k {
        return Err(Error::Precondition(format!(
            "regular bound needs d >= k - 1 and k >= 2, got d = {d}, k = {k}"
        )));
    }
    Ok(r(d + 2 - k, 2 * d + 2 - k) * Rational::from_integer(n as i64))
}

/// `(d-1)/(2d) · n - f/d²`, where `f` counts the vertices on triangle
/// components left by an optimal 4-path cover.
pub fn lb_lemma1(n: usize, d: usize, f: usize) -> Result<Rational> {
    if d < 3 || f > n || !f.is_multiple_of(3) {
        return Err(Error::Precondition(format!(
            "triangle-aware bound needs d >= 3 and 0 <= f <= n with 3 | f, got d = {d}, f = {f}, n = {n}"
        )));
    }
    Ok(r(d - 1, 2 * d) * Rational::from_integer(n as i64) - r(f, d * d))
}

/// `floor((1 - 1/p) n)` with `p = floor(d/2) + 1`: the most vertices DC can
/// return.
pub fn dc_size_bound(n: usize, d: usize) -> usize {
    let p = d / 2 + 1;
    (p - 1) * n / p
}

/// `floor(d/2)(2d-k+2) / ((floor(d/2)+1)(d-k+2))` for `1 <= k-2 < d`.
pub fn dc_ratio_bound(d: usize, k: usize) -> Result<Rational> {
    if k < 3 || k - 2 >= d {
        return Err(Error::Precondition(format!(
            "dc bound needs 1 <= k - 2 < d, got d = {d}, k = {k}"
        )));
    }
    let h = d / 2;
    Ok(r(h * (2 * d + 2 - k), (h + 1) * (d + 2 - k)))
}

pub fn approx1_ratio_bound() -> Rational {
    r(15, 8)
}

/// `(3d-2)(2d-2) / ((3d+4)(d-2))` for even `d >= 4`.
pub fn approx2_ratio_bound(d: usize) -> Result<Rational> {
    if d < 4 || !d.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "approx2 bound needs even d >= 4, got {d}"
        )));
    }
    Ok(r((3 * d - 2) * (2 * d - 2), (3 * d + 4) * (d - 2)))
}

/// Refined approx2 bound on 4-regular graphs.
pub fn approx2_four_regular_bound() -> Rational {
    r(1852, 1000)
}

/// `d² / (d² - d + 1)` for `d >= 3`.
pub fn approx3_ratio_bound(d: usize) -> Result<Rational> {
    if d < 3 {
        return Err(Error::Precondition(format!(
            "approx3 bound needs d >= 3, got {d}"
        )));
    }
    Ok(r(d * d, d * d - d + 1))
}

/// `(d² - d)/(d² - d + 1) · |A|`: most vertices approx3 leaves in its cover.
pub fn approx3_cover_bound(side: usize, d: usize) -> Rational {
    r(d * d - d, d * d - d + 1) * Rational::from_integer(side as i64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lemma2Report {
    pub n: usize,
    pub cover_size: usize,
    /// Edges with both ends in the cover.
    pub black_edges: usize,
    /// Star components (singletons, 2-paths, 3-paths, claws) left outside.
    pub star_components: usize,
}

/// Checks `3|B| = |V| + b_e + s_c` for a feasible 4-path cover `B` of a
/// 4-regular graph.
pub fn check_lemma2(g: &Graph, sol: &CoverSolution) -> Result<Lemma2Report> {
    if g.regularity() != Some(4) || sol.k != 4 {
        return Err(Error::Precondition(
            "cover identity needs a 4-regular graph and k = 4".into(),
        ));
    }
    if !verify_cover(g, sol)?.is_feasible() {
        return Err(Error::Precondition(
            "cover is not a feasible 4-path cover".into(),
        ));
    }
    let mut inside = alloc::vec![false; g.n()];
    for &v in &sol.cover {
        inside[v] = true;
    }
    let black_edges = g.edges().filter(|&(u, v)| inside[u] && inside[v]).count();
    let profile = profile_components(&g.without(&sol.cover));
    let report = Lemma2Report {
        n: g.n(),
        cover_size: sol.size(),
        black_edges,
        star_components: profile.star_count(),
    };
    if 3 * report.cover_size != report.n + report.black_edges + report.star_components {
        return Err(Error::Identity(format!(
            "3·{} != {} + {} + {}",
            report.cover_size, report.n, report.black_edges, report.star_components
        )));
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lemma3Report {
    pub cover_size: usize,
    pub bound: Rational,
}

/// `(2/5)|V| - (2/5)(p_{3↓} + c_3) - (3/20)p_{4↑} - (1/15)c_{4,6↑}` for a
/// profile of a view with maximum degree at most 2.
pub fn lemma3_bound(p: &ComponentProfile) -> Rational {
    r(2, 5) * Rational::from_integer(p.retained as i64)
        - r(2, 5) * Rational::from_integer((p.p3_down + p.c3) as i64)
        - r(3, 20) * Rational::from_integer(p.p4_up as i64)
        - r(1, 15) * Rational::from_integer(p.c46_up as i64)
}

pub fn check_lemma3(p: &ComponentProfile, cover_size: usize) -> Result<Lemma3Report> {
    if p.other != 0 || p.e != 0 {
        return Err(Error::Precondition(
            "profile is not of a max-degree-2 view".into(),
        ));
    }
    let bound = lemma3_bound(p);
    if Rational::from_integer(cover_size as i64) > bound {
        return Err(Error::Identity(format!(
            "cover of size {cover_size} exceeds {bound}"
        )));
    }
    Ok(Lemma3Report { cover_size, bound })
}
