//! The named identity checks: every polynomial family is computed along
//! independent routes (exhaustive sums, recursions, continued fractions,
//! bijective transfers) and the routes are compared exactly.
//!
//! Each check sweeps sizes up to a default bound taken from the family's
//! contract; the bound can be overridden.  Checks are independent and run
//! concurrently; reports come back sorted by check name.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::genfun::{
    self, alpha_beta_rec_first, alpha_beta_rec_last, catalan, cf_even_part, cf_odd_part, cf_terms,
    convergent, inv_lrm_alt_rec, inv_lrm_fix_rec, inv_lrm_rec,
    maj_des_rec_first, maj_des_rec_second, narayana, narayana_poly, signed_closed, signed_coeff,
    signed_rec, weighted_motzkin_series, CfKind, CfSpec, WeightTable,
};
use crate::maps::{
    motzkin_decode, motzkin_decode_fixed, motzkin_encode, motzkin_encode_fixed, nee_maj_des,
    shadow_path, shadow_path_inv, shadow_path_raster,
};
use crate::paths::{
    brute_alpha_beta_des, delta, delta_inv, delta_last, gen_dyck, gen_motzkin2,
    gen_motzkin2_restricted, peak_to_tunnel, peak_to_tunnel_inv, MotzkinStep,
};
use crate::permstats::{
    brute_inv_lrm, brute_inv_lrm_fix, brute_maj_des, gen_av321, gen_av321_filter, Permutation,
};
use crate::polyarith::{qtx, ExpVec, MonomialSubst, MultiPoly, PolySeries};
use crate::polyomino::{
    brute_area_col, brute_pp_maj_des, brute_sp_maj_des, gen_pp, gen_sp, ShortenedPolyomino,
};
use crate::OracleBounds;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// Outcome of one named check.  Failing checks carry a counterexample or a
/// first-failing order in `counterexample`.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub max_n: usize,
    pub status: CheckStatus,
    pub counterexample: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

type CheckResult = Result<(), String>;

/// A named check with its default sweep bound.
pub struct CheckDef {
    pub name: &'static str,
    pub default_max_n: usize,
    pub summary: &'static str,
    run: fn(usize) -> CheckResult,
}

impl CheckDef {
    pub fn run(&self, max_n: Option<usize>) -> CheckReport {
        let n = max_n.unwrap_or(self.default_max_n);
        let outcome = (self.run)(n);
        CheckReport {
            name: self.name.to_string(),
            max_n: n,
            status: if outcome.is_ok() { CheckStatus::Pass } else { CheckStatus::Fail },
            counterexample: outcome.err(),
        }
    }
}

/// Every check, in registry order.
pub fn all_checks() -> Vec<CheckDef> {
    vec![
        def("inv-routes", 10, "six routes to the (inv, lrm) polynomials agree", check_inv_routes),
        def("inv-recursions", 12, "the three (inv, lrm) recursions agree", check_inv_recursions),
        def("maj-routes", 10, "brute force and both recursions for (maj, des) agree", check_maj_routes),
        def("motzkin-bijection", 9, "shifted colored-Motzkin encoding is a bijection with its transfers", check_motzkin_bijection),
        def("restricted-motzkin-bijection", 9, "aligned encoding onto restricted paths, with the fix transfer", check_restricted_motzkin_bijection),
        def("shadow-bijection", 9, "shadow boundary path is a bijection carrying (lrm, inv) to peaks", check_shadow_bijection),
        def("polyomino-bijection", 9, "labeling map from shortened polyominoes is a bijection", check_polyomino_bijection),
        def("shorten-bijection", 9, "shortening matches the two families with the area/col laws", check_shorten_bijection),
        def("sumpeaks-sumtunnels", 10, "peak and tunnel statistics are equidistributed, elementwise via the transfer map", check_sumpeaks_sumtunnels),
        def("dyck-stats-recursions", 9, "the (alpha, beta, des) polynomial satisfies both peak recursions", check_dyck_stats_recursions),
        def("peak-decompositions", 7, "first-peak and last-peak decompositions are bijections", check_peak_decompositions),
        def("polyomino-bridge", 7, "area/col polynomials bridge to the path and inversion polynomials", check_polyomino_bridge),
        def("parallelogram-maj-sum", 8, "restricted (maj, des) sum over parallelogram polyominoes", check_parallelogram_maj_sum),
        def("maj-symmetry", 10, "fixed-descent maj polynomials are symmetric with pinned support", check_maj_symmetry),
        def("unimodality", 10, "fixed-descent maj polynomials are unimodal", check_unimodality),
        def("log-concavity", 6, "log concavity fails exactly at the documented witness (capped at n = 6)", check_log_concavity),
        def("parity", 7, "mod-2 structure of the polynomials at sizes 2^m - 1", check_parity),
        def("signed-routes", 12, "closed form, recursion, and brute force agree at q = -1", check_signed_routes),
        def("signed-catalan", 11, "signed counts collapse to aerated Catalan numbers", check_signed_catalan),
        def("symmetric-dyck", 10, "signed coefficients count symmetric Dyck paths by peaks", check_symmetric_dyck),
        def("signed-quadratic", 10, "quadratic functional equation for the signed series", check_signed_quadratic),
        def("signed-ode", 5, "first-order ODE for the odd signed series (order capped at 5)", check_signed_ode),
        def("functional-equation", 8, "refined functional equation with the fix variable", check_functional_equation),
        def("lrm-exc-fix", 10, "lrm = exc + fix elementwise, and the excedance polynomial identity", check_lrm_exc_fix),
        def("nee-correspondence", 9, "descents map to NEE factors of the shadow path with matching maj", check_nee_correspondence),
        def("weighted-motzkin", 7, "weighted Motzkin enumeration equals the Jacobi fraction", check_weighted_motzkin),
        def("even-odd-parts", 10, "even/odd contractions verified as series and by convergents", check_even_odd_parts),
        def("jacobi-refined", 8, "Jacobi fraction reproduces the refined polynomials", check_jacobi_refined),
        def("motzkin-decomposition", 9, "first-step case split of paths matches the recursion terms", check_motzkin_decomposition),
        def("avoidance-oracle", 8, "structural avoidance test agrees with the cubic scan", check_avoidance_oracle),
        def("counts", 12, "all generators produce Catalan-many objects", check_counts),
        def("cf-depth-stability", 10, "deeper fraction evaluation never changes settled coefficients", check_cf_depth_stability),
        def("narayana", 10, "lrm distribution at q = 1 is the Narayana polynomial", check_narayana),
        def("shadow-polyomino-link", 7, "peak statistics and polyomino statistics induce the same distribution", check_shadow_polyomino_link),
    ]
}

fn def(
    name: &'static str,
    default_max_n: usize,
    summary: &'static str,
    run: fn(usize) -> CheckResult,
) -> CheckDef {
    CheckDef { name, default_max_n, summary, run }
}

pub fn find_check(name: &str) -> Option<CheckDef> {
    all_checks().into_iter().find(|c| c.name == name)
}

/// Run the given checks concurrently; the report is sorted by check name.
pub fn run_checks(checks: Vec<CheckDef>, max_n: Option<usize>) -> Vec<CheckReport> {
    let mut reports: Vec<CheckReport> =
        checks.par_iter().map(|c| c.run(max_n)).collect();
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    reports
}

fn bounds_for(max_n: usize) -> OracleBounds {
    OracleBounds::with_max_n(max_n.max(12))
}

fn err<T: std::fmt::Display>(e: T) -> String {
    e.to_string()
}

fn expect_eq(a: &MultiPoly, b: &MultiPoly, what: impl Fn() -> String) -> CheckResult {
    if a == b {
        Ok(())
    } else {
        Err(what())
    }
}

fn at_x1(p: &MultiPoly) -> MultiPoly {
    p.subst(&[None, None, Some(MonomialSubst::one()), None])
        .expect("constant substitution cannot fail")
}

fn at_q_minus1(p: &MultiPoly) -> MultiPoly {
    p.subst(&[Some(MonomialSubst::minus_one()), None, None, None])
        .expect("constant substitution cannot fail")
}

// ---------------------------------------------------------------------------
// route-agreement checks
// ---------------------------------------------------------------------------

fn check_inv_routes(max_n: usize) -> CheckResult {
    let bounds = bounds_for(max_n);
    let order = max_n;
    let stieltjes = CfSpec::inv_lrm(order + 1).eval(order).map_err(err)?;
    let thron = CfSpec::inv_lrm_thron(order + 1).eval(order).map_err(err)?;
    for n in 0..=max_n {
        let brute = brute_inv_lrm(n, &bounds).map_err(err)?;
        for (route, poly) in [
            ("recursion", inv_lrm_rec(n)),
            ("alternate recursion", inv_lrm_alt_rec(n)),
            ("refined recursion at x=1", at_x1(&inv_lrm_fix_rec(n))),
            ("Stieltjes fraction", stieltjes.coeff(n).clone()),
            ("Thron fraction", thron.coeff(n).clone()),
        ] {
            expect_eq(&brute, &poly, || format!("{route} disagrees with brute force at n = {n}"))?;
        }
    }
    Ok(())
}

fn check_inv_recursions(max_n: usize) -> CheckResult {
    for n in 0..=max_n {
        let base = inv_lrm_rec(n);
        expect_eq(&base, &inv_lrm_alt_rec(n), || format!("alternate recursion differs at n = {n}"))?;
        expect_eq(&base, &at_x1(&inv_lrm_fix_rec(n)), || {
            format!("refined recursion at x=1 differs at n = {n}")
        })?;
    }
    Ok(())
}

fn check_maj_routes(max_n: usize) -> CheckResult {
    let bounds = bounds_for(max_n);
    for n in 0..=max_n {
        let brute = brute_maj_des(n, &bounds).map_err(err)?;
        expect_eq(&brute, &maj_des_rec_first(n), || format!("first recursion differs at n = {n}"))?;
        expect_eq(&brute, &maj_des_rec_second(n), || format!("second recursion differs at n = {n}"))?;
    }
    Ok(())
}

fn check_dyck_stats_recursions(max_n: usize) -> CheckResult {
    let bounds = bounds_for(max_n);
    for n in 0..=max_n {
        let brute = brute_alpha_beta_des(n, &bounds).map_err(err)?;
        expect_eq(&brute, &alpha_beta_rec_first(n), || {
            format!("first-peak recursion differs at n = {n}")
        })?;
        expect_eq(&brute, &alpha_beta_rec_last(n), || {
            format!("last-peak recursion differs at n = {n}")
        })?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// bijection suites
// ---------------------------------------------------------------------------

fn check_motzkin_bijection(max_n: usize) -> CheckResult {
    for n in 1..=max_n {
        let mut image = HashSet::new();
        let mut count = 0usize;
        for p in gen_av321(n) {
            let m = motzkin_encode(&p).map_err(err)?;
            if p.lrm() != m.count(MotzkinStep::Up) + m.count(MotzkinStep::Level1) + 1 {
                return Err(format!("lrm transfer fails for {p}"));
            }
            let inv_rhs =
                m.count(MotzkinStep::Down) + m.count(MotzkinStep::Level0) + m.area_geometric();
            if p.inv() != inv_rhs {
                return Err(format!("inv transfer fails for {p}"));
            }
            if motzkin_decode(&m) != p {
                return Err(format!("decode round trip fails for {p}"));
            }
            image.insert(m.to_string());
            count += 1;
        }
        let codomain = gen_motzkin2(n - 1).count();
        if image.len() != count || count != codomain {
            return Err(format!(
                "not a bijection at n = {n}: {count} avoiders, {} distinct images, {codomain} paths",
                image.len()
            ));
        }
    }
    Ok(())
}

fn check_restricted_motzkin_bijection(max_n: usize) -> CheckResult {
    for n in 0..=max_n {
        let mut image = HashSet::new();
        let mut count = 0usize;
        for p in gen_av321(n) {
            let m = motzkin_encode_fixed(&p).map_err(err)?;
            if !m.is_restricted() {
                return Err(format!("image of {p} has a ground-level L0"));
            }
            if p.fix() != m.level1_at_ground() {
                return Err(format!("fix transfer fails for {p}"));
            }
            if p.lrm() != m.count(MotzkinStep::Up) + m.count(MotzkinStep::Level1) {
                return Err(format!("lrm transfer fails for {p}"));
            }
            if p.inv() != m.height_sum() {
                return Err(format!("inv transfer fails for {p}"));
            }
            if motzkin_decode_fixed(&m).map_err(err)? != p {
                return Err(format!("decode round trip fails for {p}"));
            }
            image.insert(m.to_string());
            count += 1;
        }
        let codomain = gen_motzkin2_restricted(n).count();
        if image.len() != count || count != codomain {
            return Err(format!("not a bijection onto restricted paths at n = {n}"));
        }
    }
    Ok(())
}

fn check_shadow_bijection(max_n: usize) -> CheckResult {
    for n in 0..=max_n {
        let mut image = HashSet::new();
        let mut count = 0usize;
        for p in gen_av321(n) {
            let path = shadow_path(&p).map_err(err)?;
            if p.lrm() != path.num_peaks() {
                return Err(format!("lrm/peaks transfer fails for {p}"));
            }
            if p.inv() != path.sum_peaks() {
                return Err(format!("inv/sum-peaks transfer fails for {p}"));
            }
            if shadow_path_inv(&path) != p {
                return Err(format!("inverse fails for {p}"));
            }
            if n <= 6 && shadow_path_raster(&p).map_err(err)? != path {
                return Err(format!("raster oracle disagrees for {p}"));
            }
            image.insert(path.to_string());
            count += 1;
        }
        let codomain = gen_dyck(n).count();
        if image.len() != count || count != codomain {
            return Err(format!("not a bijection onto Dyck paths at n = {n}"));
        }
    }
    Ok(())
}

fn check_polyomino_bijection(max_n: usize) -> CheckResult {
    let bounds = bounds_for(max_n);
    for n in 0..=max_n {
        let polyominoes = gen_sp(n, &bounds).map_err(err)?;
        let mut image = HashSet::new();
        for sp in &polyominoes {
            let p = sp.to_permutation();
            if !p.avoids_321() {
                return Err(format!("image {p} contains 321"));
            }
            if sp.area() != p.inv() {
                return Err(format!("area/inv transfer fails for {p}"));
            }
            if sp.col() != p.lrm() {
                return Err(format!("col/lrm transfer fails for {p}"));
            }
            if &ShortenedPolyomino::from_permutation(&p).map_err(err)? != sp {
                return Err(format!("inverse fails for {p}"));
            }
            if sp.lower().descent_set() != p.descent_set() {
                return Err(format!("descents of {p} are not the EN factors of the lower path"));
            }
            image.insert(p);
        }
        if image.len() != polyominoes.len() || image.len() != gen_av321(n).count() {
            return Err(format!("not a bijection onto avoiders at n = {n}"));
        }
    }
    Ok(())
}

fn check_shorten_bijection(max_n: usize) -> CheckResult {
    let bounds = bounds_for(max_n);
    for m in 1..=max_n {
        let parallelograms = gen_pp(m, &bounds).map_err(err)?;
        let mut image = HashSet::new();
        for pp in &parallelograms {
            let sp = pp.shorten();
            if pp.area() != sp.area() + sp.col() {
                return Err(format!("area law fails at size {m}"));
            }
            if pp.col() != sp.col() {
                return Err(format!("col law fails at size {m}"));
            }
            if &sp.unshorten() != pp {
                return Err(format!("unshorten round trip fails at size {m}"));
            }
            image.insert(format!("{}|{}", sp.upper(), sp.lower()));
        }
        let codomain = gen_sp(m - 1, &bounds).map_err(err)?.len();
        if image.len() != parallelograms.len() || image.len() != codomain {
            return Err(format!("shortening is not a bijection at size {m}"));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Dyck-path statistics
// ---------------------------------------------------------------------------

fn check_sumpeaks_sumtunnels(max_n: usize) -> CheckResult {
    for n in 0..=max_n {
        let mut lhs = MultiPoly::zero();
        let mut rhs = MultiPoly::zero();
        let one = 1.into();
        for p in gen_dyck(n) {
            lhs.add_term(ExpVec([p.sum_peaks() as i32, p.num_peaks() as i32, 0, 0]), &one);
            rhs.add_term(ExpVec([p.sum_tunnels() as i32, (n - p.des()) as i32, 0, 0]), &one);
            let h = peak_to_tunnel(&p);
            if p.sum_peaks() != h.sum_tunnels() || p.num_peaks() != n - h.des() {
                return Err(format!("elementwise transfer fails for {p}"));
            }
            if peak_to_tunnel_inv(&h) != p {
                return Err(format!("transfer map round trip fails for {p}"));
            }
        }
        expect_eq(&lhs, &rhs, || format!("aggregate polynomials differ at n = {n}"))?;
    }
    Ok(())
}

fn check_peak_decompositions(max_n: usize) -> CheckResult {
    for n in 1..=max_n {
        let all: HashSet<String> = gen_dyck(n).map(|p| p.to_string()).collect();
        for p in gen_dyck(n) {
            let (q, r) = delta_inv(&p);
            if delta(&q, &r) != p {
                return Err(format!("delta(delta_inv) fails for {p}"));
            }
        }
        let mut delta_image = HashSet::new();
        let mut last_image = HashSet::new();
        let mut pairs = 0usize;
        for k in 0..n {
            for q in gen_dyck(k) {
                for r in gen_dyck(n - 1 - k) {
                    pairs += 1;
                    let p = delta(&q, &r);
                    let (q2, r2) = delta_inv(&p);
                    if q2 != q || r2 != r {
                        return Err(format!("delta_inv(delta) fails for ({q}, {r})"));
                    }
                    delta_image.insert(p.to_string());
                    last_image.insert(delta_last(&q, &r).to_string());
                }
            }
        }
        if delta_image != all || last_image != all || pairs != delta_image.len() {
            return Err(format!("peak decompositions are not bijections at n = {n}"));
        }
    }
    Ok(())
}

fn check_shadow_polyomino_link(max_n: usize) -> CheckResult {
    let bounds = bounds_for(max_n);
    for n in 0..=max_n {
        let one = 1.into();
        let mut from_paths = MultiPoly::zero();
        for p in gen_dyck(n) {
            from_paths.add_term(ExpVec([p.sum_peaks() as i32, p.num_peaks() as i32, 0, 0]), &one);
        }
        let mut from_polyominoes = MultiPoly::zero();
        for sp in gen_sp(n, &bounds).map_err(err)? {
            from_polyominoes.add_term(ExpVec([sp.area() as i32, sp.col() as i32, 0, 0]), &one);
        }
        expect_eq(&from_paths, &from_polyominoes, || {
            format!("(inv, lrm) distributions differ at n = {n}")
        })?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// polyomino identities
// ---------------------------------------------------------------------------

fn check_polyomino_bridge(max_n: usize) -> CheckResult {
    let bounds = bounds_for(max_n + 1);
    for n in 0..=max_n {
        let area_col = brute_area_col(n + 1, &bounds).map_err(err)?;
        if n >= 1 {
            // area/col polynomial of size n+1 = q^n t * C_n(q, 1/q; t)
            let c = brute_alpha_beta_des(n, &bounds).map_err(err)?;
            let substituted = c
                .subst(&[
                    None,
                    Some(MonomialSubst::monomial(ExpVec([-1, 0, 0, 0]))),
                    Some(MonomialSubst::monomial(ExpVec([0, 1, 0, 0]))),
                    None,
                ])
                .map_err(err)?;
            let bridged = substituted.mul(&MultiPoly::monomial(1, ExpVec([n as i32, 1, 0, 0])));
            expect_eq(&area_col, &bridged, || format!("path bridge fails at n = {n}"))?;
        }
        // inversion polynomial = area/col polynomial at t -> t/q
        let shifted = area_col
            .subst(&[None, Some(MonomialSubst::monomial(ExpVec([-1, 1, 0, 0]))), None, None])
            .map_err(err)?;
        let inv = brute_inv_lrm(n, &bounds).map_err(err)?;
        expect_eq(&inv, &shifted, || format!("inversion bridge fails at n = {n}"))?;
        if n >= 1 {
            // composing the two: q^{n-1} t C_n(q, 1/q; t/q) is the
            // inversion polynomial directly
            let c = brute_alpha_beta_des(n, &bounds).map_err(err)?;
            let composed = c
                .subst(&[
                    None,
                    Some(MonomialSubst::monomial(ExpVec([-1, 0, 0, 0]))),
                    Some(MonomialSubst::monomial(ExpVec([-1, 1, 0, 0]))),
                    None,
                ])
                .map_err(err)?
                .mul(&MultiPoly::monomial(1, ExpVec([n as i32 - 1, 1, 0, 0])));
            expect_eq(&inv, &composed, || format!("direct path identity fails at n = {n}"))?;
        }
    }
    Ok(())
}

fn check_parallelogram_maj_sum(max_n: usize) -> CheckResult {
    let bounds = bounds_for(max_n);
    let t = MultiPoly::var(qtx::T);
    for n in 0..=max_n {
        // the unrestricted sum over the shortened family is the (maj, des)
        // polynomial itself
        let sp_sum = brute_sp_maj_des(n, &bounds).map_err(err)?;
        let m = brute_maj_des(n, &bounds).map_err(err)?;
        expect_eq(&sp_sum, &m, || format!("shortened-family sum differs at n = {n}"))?;
    }
    for n in 2..=max_n {
        let lhs = brute_pp_maj_des(n, &bounds).map_err(err)?;
        let m1 = brute_maj_des(n - 1, &bounds).map_err(err)?;
        let m2 = brute_maj_des(n - 2, &bounds).map_err(err)?;
        let head = MultiPoly::monomial(1, ExpVec([n as i32 - 1, 0, 0, 0]))
            .mul(&t)
            .sub(&MultiPoly::one());
        let rhs = m1.add(&head.mul(&m2));
        expect_eq(&lhs, &rhs, || format!("restricted sum identity fails at n = {n}"))?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// coefficient structure of the (maj, des) family
// ---------------------------------------------------------------------------

fn maj_by_des(n: usize, k: usize, bounds: &OracleBounds) -> Result<MultiPoly, String> {
    let m = if n <= bounds.catalan {
        brute_maj_des(n, bounds).map_err(err)?
    } else {
        maj_des_rec_first(n)
    };
    Ok(m.coeff_of(qtx::T, k as i32))
}

fn check_maj_symmetry(max_n: usize) -> CheckResult {
    let bounds = bounds_for(max_n);
    for n in 1..=max_n {
        for k in 0..n {
            let a = maj_by_des(n, k, &bounds)?;
            if k == 0 && !a.is_one() {
                return Err(format!("A({n}, 0) is not the constant 1"));
            }
            if a.is_zero() {
                continue;
            }
            if !a.is_symmetric_in(qtx::Q) {
                return Err(format!("A({n}, {k}) is not symmetric"));
            }
            let (lo, hi) = a.degree_range(qtx::Q).expect("nonzero polynomial");
            let (k, n) = (k as i32, n as i32);
            if lo < k * k || hi > n * k - k * k {
                return Err(format!("support of A({n}, {k}) escapes [k^2, nk - k^2]"));
            }
        }
    }
    Ok(())
}

fn check_unimodality(max_n: usize) -> CheckResult {
    let bounds = bounds_for(max_n);
    for n in 1..=max_n {
        for k in 0..n {
            let a = maj_by_des(n, k, &bounds)?;
            if !a.is_unimodal(qtx::Q).map_err(err)? {
                return Err(format!("A({n}, {k}) is not unimodal"));
            }
        }
    }
    Ok(())
}

fn check_log_concavity(max_n: usize) -> CheckResult {
    // The documented witness statement covers sizes up to 6 only.
    let cap = max_n.min(6);
    let bounds = bounds_for(cap);
    for n in 1..=cap {
        for k in 0..n {
            let a = maj_by_des(n, k, &bounds)?;
            let concave = a.is_log_concave(qtx::Q).map_err(err)?;
            let expected = (n, k) != (6, 2);
            if concave != expected {
                return Err(format!(
                    "A({n}, {k}) log concavity is {concave}, expected {expected}"
                ));
            }
        }
    }
    if cap >= 6 {
        Ok(())
    } else {
        Err("sweep did not reach the documented witness at n = 6".to_string())
    }
}

fn check_parity(max_n: usize) -> CheckResult {
    use num_integer::Integer;
    use num_traits::One;
    let bounds = bounds_for(max_n.min(12));
    let q1 = |p: &MultiPoly| {
        p.subst(&[Some(MonomialSubst::one()), None, None, None])
            .expect("constant substitution cannot fail")
    };
    let t1 = |p: &MultiPoly| {
        p.subst(&[None, Some(MonomialSubst::one()), None, None])
            .expect("constant substitution cannot fail")
    };
    for n in [1usize, 3, 7, 15].into_iter().filter(|&n| n <= max_n) {
        let (inv, maj) = if n <= bounds.catalan {
            (brute_inv_lrm(n, &bounds).map_err(err)?, brute_maj_des(n, &bounds).map_err(err)?)
        } else {
            (inv_lrm_rec(n), maj_des_rec_first(n))
        };
        for (label, poly, slot) in [
            ("inv polynomial at t=1", t1(&inv), qtx::Q),
            ("maj polynomial at t=1", t1(&maj), qtx::Q),
            ("descent polynomial at q=1", q1(&maj), qtx::T),
        ] {
            let (lo, _) = poly.degree_range(slot).ok_or(format!("{label} vanishes at n = {n}"))?;
            if lo != 0 {
                return Err(format!("{label} at n = {n} has no constant term"));
            }
            let coeffs = poly.univariate_coeffs(slot).map_err(err)?;
            if !coeffs[0].is_one() {
                return Err(format!("{label} at n = {n} has constant term != 1"));
            }
            for (i, c) in coeffs.iter().enumerate().skip(1) {
                if c.is_odd() {
                    return Err(format!("{label} at n = {n}: coefficient {i} is odd"));
                }
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// signed enumeration
// ---------------------------------------------------------------------------

fn check_signed_routes(max_n: usize) -> CheckResult {
    let bounds = bounds_for(max_n);
    for n in 0..=max_n {
        let closed = signed_closed(n);
        expect_eq(&closed, &signed_rec(n), || format!("signed recursion differs at n = {n}"))?;
        let brute = at_q_minus1(&brute_inv_lrm(n, &bounds).map_err(err)?);
        expect_eq(&closed, &brute, || format!("signed brute force differs at n = {n}"))?;
    }
    Ok(())
}

fn check_signed_catalan(max_n: usize) -> CheckResult {
    use num_traits::Zero;
    for n in 1..=max_n {
        let total = signed_rec(n).eval_all_ones();
        if n % 2 == 0 {
            if !total.is_zero() {
                return Err(format!("signed count at even size {n} is {total}, not 0"));
            }
        } else if total != catalan((n - 1) / 2) {
            return Err(format!("signed count at odd size {n} is {total}"));
        }
    }
    Ok(())
}

fn check_symmetric_dyck(max_n: usize) -> CheckResult {
    for n in 1..=max_n {
        let mut counts: BTreeMap<usize, num_bigint::BigInt> = BTreeMap::new();
        for p in gen_dyck(n) {
            if p.is_symmetric() {
                *counts.entry(p.num_peaks()).or_default() += 1;
            }
        }
        for k in 1..=n {
            let want = signed_coeff(n, k).map_err(err)?;
            let got = counts.get(&k).cloned().unwrap_or_default();
            if got != want {
                return Err(format!(
                    "symmetric paths of semilength {n} with {k} peaks: {got}, expected {want}"
                ));
            }
        }
    }
    Ok(())
}

fn check_signed_quadratic(order: usize) -> CheckResult {
    let bounds = bounds_for(order);
    let residual = genfun::signed_quadratic_residual(order, &bounds).map_err(err)?;
    match residual.first_nonzero() {
        None => Ok(()),
        Some(k) => Err(format!("first failing order {k}")),
    }
}

fn check_signed_ode(order: usize) -> CheckResult {
    // coefficient n of the odd series needs the brute polynomial of size
    // 2n + 1, so the contract order 5 already consumes sizes up to 11
    let order = order.min(5);
    let bounds = bounds_for(2 * order + 1);
    let residual = genfun::signed_ode_residual(order, &bounds).map_err(err)?;
    match residual.first_nonzero() {
        None => Ok(()),
        Some(k) => Err(format!("first failing order {k}")),
    }
}

fn check_functional_equation(order: usize) -> CheckResult {
    let bounds = bounds_for(order);
    let residual = genfun::funceq_residual(order, &bounds).map_err(err)?;
    match residual.first_nonzero() {
        None => Ok(()),
        Some(k) => Err(format!("first failing order {k}")),
    }
}

// ---------------------------------------------------------------------------
// statistic identities on permutations
// ---------------------------------------------------------------------------

fn check_lrm_exc_fix(max_n: usize) -> CheckResult {
    let bounds = bounds_for(max_n);
    for n in 0..=max_n {
        let mut exc_poly = MultiPoly::zero();
        let one = 1.into();
        for p in gen_av321(n) {
            if p.lrm() != p.exc() + p.fix() {
                return Err(format!("lrm != exc + fix for {p}"));
            }
            // a value is a left-right maximum exactly when it sits at or
            // above its position
            let at_or_above = p
                .word()
                .iter()
                .enumerate()
                .filter(|&(i, &b)| b as usize > i)
                .count();
            if at_or_above != p.lrm() {
                return Err(format!("at-or-above-diagonal rule fails for {p}"));
            }
            exc_poly.add_term(ExpVec([p.inv() as i32, p.exc() as i32, p.fix() as i32, 0]), &one);
        }
        // substituting x -> x/t turns the lrm marker into an excedance marker
        let refined = brute_inv_lrm_fix(n, &bounds).map_err(err)?;
        let transformed = refined
            .subst(&[None, None, Some(MonomialSubst::monomial(ExpVec([0, -1, 1, 0]))), None])
            .map_err(err)?;
        expect_eq(&exc_poly, &transformed, || {
            format!("excedance polynomial identity fails at n = {n}")
        })?;
    }
    Ok(())
}

fn check_nee_correspondence(max_n: usize) -> CheckResult {
    for n in 0..=max_n {
        for p in gen_av321(n) {
            let path = shadow_path(&p).map_err(err)?;
            let (maj, des) = nee_maj_des(&path);
            if maj != p.maj() || des != p.des() {
                return Err(format!("NEE statistics disagree for {p}"));
            }
        }
    }
    Ok(())
}

fn check_avoidance_oracle(max_n: usize) -> CheckResult {
    use itertools::Itertools;
    let cap = max_n.min(9);
    for n in 0..=cap {
        let avoiders = gen_av321_filter(n).count();
        for w in (1..=n as u32).permutations(n) {
            let p = Permutation::new(w).expect("itertools yields permutations");
            if p.avoids_321() == p.contains_321_direct() {
                return Err(format!("avoidance tests disagree on {p}"));
            }
        }
        if num_bigint::BigInt::from(avoiders) != catalan(n) {
            return Err(format!("filter oracle count at n = {n} is {avoiders}"));
        }
    }
    for n in 0..=max_n.min(12) {
        for p in gen_av321(n) {
            if p.val_pos().to_permutation().map_err(err)? != p {
                return Err(format!("val/pos round trip fails for {p}"));
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// continued fractions and series
// ---------------------------------------------------------------------------

fn check_weighted_motzkin(order: usize) -> CheckResult {
    let series = weighted_motzkin_series(&WeightTable::inv_lrm_fix(order + 1), order).map_err(err)?;
    let jac = CfSpec::inv_lrm_fix(CfSpec::needed_depth(CfKind::Jacobi, order))
        .eval(order)
        .map_err(err)?;
    if series != jac {
        return Err("weighted enumeration differs from the Jacobi fraction".to_string());
    }
    let ones = weighted_motzkin_series(&WeightTable::ones(order + 1), order).map_err(err)?;
    let motzkin: Vec<num_bigint::BigInt> =
        ones.coeffs().iter().map(|c| c.eval_all_ones()).collect();
    let mut expect = vec![num_bigint::BigInt::from(1)];
    // Motzkin recurrence M_n = M_{n-1} + sum M_k M_{n-2-k}
    for n in 1..=order {
        let mut m = expect[n - 1].clone();
        for k in 0..n.saturating_sub(1) {
            m += &expect[k] * &expect[n - 2 - k];
        }
        expect.push(m);
    }
    if motzkin != expect {
        return Err("unit weights do not count Motzkin paths".to_string());
    }
    Ok(())
}

fn check_even_odd_parts(order: usize) -> CheckResult {
    // even part of the Stieltjes expansion equals the Jacobi expansion at x = 1
    let stieltjes = CfSpec::inv_lrm(2 * order + 5);
    let even = cf_even_part(&stieltjes).map_err(err)?;
    let jac = CfSpec::inv_lrm_fix(CfSpec::needed_depth(CfKind::Jacobi, order))
        .subst_coeffs(&[None, None, Some(MonomialSubst::one()), None])
        .map_err(err)?;
    if even.eval(order).map_err(err)? != jac.eval(order).map_err(err)? {
        return Err("even part does not match the Jacobi expansion".to_string());
    }

    // odd part of the signed fraction is 1 + z C(z^2)
    let signed = stieltjes
        .subst_coeffs(&[
            Some(MonomialSubst::minus_one()),
            Some(MonomialSubst::one()),
            None,
            None,
        ])
        .map_err(err)?;
    let odd = cf_odd_part(&signed).map_err(err)?;
    let f = odd.eval(order).map_err(err)?;
    let cat = CfSpec::catalan(order + 1).eval(order).map_err(err)?;
    for k in 0..=order {
        let want = if k == 0 {
            MultiPoly::one()
        } else if k % 2 == 1 {
            cat.coeff((k - 1) / 2).clone()
        } else {
            MultiPoly::zero()
        };
        if f.coeff(k) != &want {
            return Err(format!("odd part coefficient {k} differs from 1 + z C(z^2)"));
        }
    }

    // convergent-by-convergent validation of both contractions
    for spec in [CfSpec::catalan(12), CfSpec::inv_lrm(12)] {
        let poly_order = 30;
        let even = cf_even_part(&spec).map_err(err)?;
        let odd = cf_odd_part(&spec).map_err(err)?;
        for m in 1..=4usize {
            let (a, b) = convergent(&cf_terms(&spec, 2 * m, poly_order), poly_order);
            let (ae, be) = convergent(&cf_terms(&even, m, poly_order), poly_order);
            if a.mul(&be).map_err(err)? != ae.mul(&b).map_err(err)? {
                return Err(format!("even contraction convergent {m} differs"));
            }
            let (a, b) = convergent(&cf_terms(&spec, 2 * m + 1, poly_order), poly_order);
            let mut inner = cf_terms(&odd.tail, m, poly_order);
            inner[0].0 =
                PolySeries::from_coeffs(vec![MultiPoly::zero(), odd.scale.neg()], poly_order);
            let (ai, bi) = convergent(&inner, poly_order);
            let lhs = a.mul(&bi).map_err(err)?;
            let rhs = bi.sub(&ai).map_err(err)?.mul(&b).map_err(err)?;
            if lhs != rhs {
                return Err(format!("odd contraction convergent {m} differs"));
            }
        }
    }
    Ok(())
}

fn check_jacobi_refined(order: usize) -> CheckResult {
    let bounds = bounds_for(order);
    let jac = CfSpec::inv_lrm_fix(CfSpec::needed_depth(CfKind::Jacobi, order))
        .eval(order)
        .map_err(err)?;
    for n in 0..=order {
        let brute = brute_inv_lrm_fix(n, &bounds).map_err(err)?;
        expect_eq(&brute, jac.coeff(n), || format!("Jacobi coefficient differs at n = {n}"))?;
    }
    Ok(())
}

fn check_motzkin_decomposition(max_n: usize) -> CheckResult {
    let bounds = bounds_for(max_n);
    let weight = |m: &crate::paths::TwoMotzkinPath| -> MultiPoly {
        let q = m.count(MotzkinStep::Down) + m.count(MotzkinStep::Level0) + m.area_geometric();
        let t = m.count(MotzkinStep::Up) + m.count(MotzkinStep::Level1) + 1;
        MultiPoly::monomial(1, ExpVec([q as i32, t as i32, 0, 0]))
    };
    for n in 2..=max_n {
        let inv: Vec<MultiPoly> = (0..n)
            .map(|k| brute_inv_lrm(k, &bounds).map_err(err))
            .collect::<Result<_, _>>()?;
        let mut level0 = MultiPoly::zero();
        let mut level1 = MultiPoly::zero();
        let mut arch: BTreeMap<usize, MultiPoly> = BTreeMap::new();
        for m in gen_motzkin2(n - 1) {
            let w = weight(&m);
            match m.steps()[0] {
                MotzkinStep::Level0 => level0 = level0.add(&w),
                MotzkinStep::Level1 => level1 = level1.add(&w),
                MotzkinStep::Up => {
                    let hs = m.start_heights();
                    let ret = (1..m.len())
                        .find(|&j| hs[j] == 1 && m.steps()[j] == MotzkinStep::Down)
                        .expect("path returns to the axis");
                    // M = U N D O with N of length ret - 1, so k = ret
                    let k = ret;
                    let entry = arch.entry(k).or_insert_with(MultiPoly::zero);
                    *entry = entry.add(&w);
                }
                MotzkinStep::Down => unreachable!("paths cannot start with a down step"),
            }
        }
        let q = MultiPoly::var(qtx::Q);
        let t = MultiPoly::var(qtx::T);
        expect_eq(&level0, &q.mul(&inv[n - 1]), || {
            format!("ground L0 case differs at n = {n}")
        })?;
        expect_eq(&level1, &t.mul(&inv[n - 1]), || {
            format!("ground L1 case differs at n = {n}")
        })?;
        for (k, sum) in arch {
            let expected = MultiPoly::monomial(1, ExpVec([k as i32 + 1, 0, 0, 0]))
                .mul(&inv[k])
                .mul(&inv[n - 1 - k]);
            expect_eq(&sum, &expected, || format!("arch case k = {k} differs at n = {n}"))?;
        }
    }
    Ok(())
}

fn check_counts(max_n: usize) -> CheckResult {
    for n in 0..=max_n {
        if num_bigint::BigInt::from(gen_av321(n).count()) != catalan(n) {
            return Err(format!("avoider count differs at n = {n}"));
        }
    }
    for n in 0..=max_n.min(10) {
        if num_bigint::BigInt::from(gen_dyck(n).count()) != catalan(n) {
            return Err(format!("Dyck path count differs at n = {n}"));
        }
        if n >= 1 {
            if num_bigint::BigInt::from(gen_motzkin2(n - 1).count()) != catalan(n) {
                return Err(format!("colored Motzkin count differs at n = {n}"));
            }
            if num_bigint::BigInt::from(gen_motzkin2_restricted(n).count()) != catalan(n) {
                return Err(format!("restricted Motzkin count differs at n = {n}"));
            }
        }
    }
    let bounds = bounds_for(max_n);
    for n in 0..=max_n.min(9) {
        if num_bigint::BigInt::from(gen_sp(n, &bounds).map_err(err)?.len()) != catalan(n) {
            return Err(format!("shortened polyomino count differs at n = {n}"));
        }
        if num_bigint::BigInt::from(gen_pp(n + 1, &bounds).map_err(err)?.len()) != catalan(n) {
            return Err(format!("parallelogram polyomino count differs at n = {n}"));
        }
    }
    Ok(())
}

type SpecBuilder = fn(usize) -> CfSpec;

fn check_cf_depth_stability(order: usize) -> CheckResult {
    let specs: [(&str, SpecBuilder); 4] = [
        ("catalan", CfSpec::catalan),
        ("stieltjes", CfSpec::inv_lrm),
        ("thron", CfSpec::inv_lrm_thron),
        ("jacobi", CfSpec::inv_lrm_fix),
    ];
    for (name, build) in specs {
        let kind = build(1).kind();
        let needed = CfSpec::needed_depth(kind, order);
        let at_needed = build(needed).eval(order).map_err(err)?;
        let deeper = build(needed + 7).eval(order).map_err(err)?;
        if at_needed != deeper {
            return Err(format!("{name} fraction changes below order {order} when deepened"));
        }
        if needed >= 2 && build(needed - 1).eval(order).is_ok() {
            return Err(format!("{name} fraction accepted an insufficient depth"));
        }
    }
    Ok(())
}

fn check_narayana(max_n: usize) -> CheckResult {
    let bounds = bounds_for(max_n);
    for n in 0..=max_n {
        let brute = brute_inv_lrm(n, &bounds).map_err(err)?;
        let at_q1 = brute
            .subst(&[Some(MonomialSubst::one()), None, None, None])
            .map_err(err)?;
        expect_eq(&at_q1, &narayana_poly(n), || {
            format!("Narayana polynomial differs at n = {n}")
        })?;
        for k in 1..=n {
            let coeff = at_q1.coeff_of(qtx::T, k as i32).eval_all_ones();
            if coeff != narayana(n, k).map_err(err)? {
                return Err(format!("Narayana number differs at ({n}, {k})"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_names_are_unique_and_sorted_reports() {
        let checks = all_checks();
        let names: HashSet<&str> = checks.iter().map(|c| c.name).collect();
        assert_eq!(names.len(), checks.len());
        assert!(find_check("sumpeaks-sumtunnels").is_some());
        assert!(find_check("unimodality").is_some());
        assert!(find_check("no-such-check").is_none());
    }

    #[test]
    fn small_run_passes_and_serializes() {
        let report = find_check("narayana").unwrap().run(Some(5));
        assert!(report.passed());
        let js = serde_json::to_string(&report).unwrap();
        assert!(js.contains("\"status\":\"pass\""));
    }

    #[test]
    fn failing_checks_carry_counterexamples() {
        // log-concavity clamped below its witness reports a failure
        let report = find_check("log-concavity").unwrap().run(Some(4));
        assert!(!report.passed());
        assert!(report.counterexample.is_some());
    }
}
