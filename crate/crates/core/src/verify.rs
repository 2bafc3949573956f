//! The regression suite behind `verify-paper`: thirteen numbered criteria,
//! each a list of exact checks. Criteria run concurrently; the report is
//! always in criterion order.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use crate::cone::{certify_membership, json, porta};
use crate::curves::{
    class_l7, counterexample_ftau, curve_ck, eff_cone, eff_xn2_derivation, nem_cone, nem_full_system, nem_hrep,
    nem_rays_inductive, surface_nef_from_cover, surface_nef_via_gram,
};
use crate::fixtures::Fixtures;
use crate::linalg::fmt_vec;
use crate::mg::{
    c_coefficients, corollary_cone_m21, family_reductions, hyperelliptic_curve_image, hyperelliptic_pushforward, m21_cones, m21_pushforward,
    mg1_inequality_family, pointed_curve_image, pointed_pushforward, reduction_identity_holds, x71_mori_data, Reduction, Target,
};
use crate::moduli::{relations_and_basis, BoundaryLabel, SpaceId};
use crate::{q, qv, RatCone, RatVector, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Section {
    Table,
    Counterexample,
    NemX0,
    NemX1,
    EffX2,
    Genus,
    M21,
    Containment,
    Formats,
}

impl Section {
    pub const ALL: [Section; 9] = [
        Section::Table,
        Section::Counterexample,
        Section::NemX0,
        Section::NemX1,
        Section::EffX2,
        Section::Genus,
        Section::M21,
        Section::Containment,
        Section::Formats,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Section::Table => "table",
            Section::Counterexample => "counterexample",
            Section::NemX0 => "nem-x0",
            Section::NemX1 => "nem-x1",
            Section::EffX2 => "eff-x2",
            Section::Genus => "genus",
            Section::M21 => "m21",
            Section::Containment => "containment",
            Section::Formats => "formats",
        }
    }
}

impl FromStr for Section {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Section::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Section::ALL.iter().map(|x| x.name()).collect();
            format!("unknown section '{s}' (expected one of {})", names.join(", "))
        })
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub number: usize,
    pub title: &'static str,
    pub section: Section,
    pub checks: Vec<Check>,
    pub millis: u128,
}

impl CriterionReport {
    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub criteria: Vec<CriterionReport>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.criteria.iter().all(CriterionReport::passed)
    }

    /// One `PASS`/`FAIL` line per criterion, then failing checks indented.
    /// Timings are left out so identical runs print identical text.
    pub fn render(&self, verbose: bool) -> String {
        let mut s = String::new();
        for c in &self.criteria {
            let tag = if c.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(s, "{tag} {:>2} [{}] {}", c.number, c.section.name(), c.title);
            for k in &c.checks {
                if verbose || !k.passed {
                    let t = if k.passed { "ok  " } else { "FAIL" };
                    let _ = writeln!(s, "     {t} {}: {}", k.label, k.detail);
                }
            }
        }
        let passed = self.criteria.iter().filter(|c| c.passed()).count();
        let _ = writeln!(s, "{passed}/{} criteria passed", self.criteria.len());
        s
    }
}

pub const CRITERIA: [(usize, Section, &str); 13] = [
    (1, Section::Table, "Picard numbers and boundary counts, 5 ≤ n ≤ 12, m ≤ 3"),
    (2, Section::Counterexample, "F_τ on X_{n,3} is outside the boundary cone"),
    (3, Section::NemX0, "Nem(X_{n,0}) rays for n = 6..9"),
    (4, Section::NemX0, "inductive rays of Nem(X_{n,0}) agree with double description, 6 ≤ n ≤ 14"),
    (5, Section::NemX1, "Nem(X_{n,1}) for n = 5, 6, 7"),
    (6, Section::NemX1, "redundancy certificates of the X_{n,1} system, 5 ≤ n ≤ 12"),
    (7, Section::EffX2, "Eff(X_{5,2}) and its dual"),
    (8, Section::EffX2, "b̌*_j ≥ 0 on Eff(X_{n,2}), 5 ≤ n ≤ 10"),
    (9, Section::Genus, "hyperelliptic and pointed pushforwards; reduction weights"),
    (10, Section::M21, "cones on M̄_{2,1} and the X_{7,1} face"),
    (11, Section::M21, "L₇ pushes forward to (10,6,3,1)"),
    (12, Section::Containment, "Nef ⊆ Nem ⊆ Eff on every example space"),
    (13, Section::Formats, "PORTA and JSON round trips"),
];

/// Runs the selected criteria (all if `sections` is `None`).
pub fn run(f: &Fixtures, sections: Option<&[Section]>) -> Report {
    let selected: Vec<_> = CRITERIA.iter().filter(|(_, s, _)| sections.is_none_or(|ss| ss.contains(s))).collect();
    let criteria = selected.par_iter().map(|&&(k, _, _)| run_criterion(f, k)).collect();
    Report { criteria }
}

pub fn run_criterion(f: &Fixtures, number: usize) -> CriterionReport {
    let &(_, section, title) = CRITERIA.iter().find(|c| c.0 == number).expect("criterion number in 1..=13");
    let start = Instant::now();
    let mut ck = Checks(Vec::new());
    match number {
        1 => table(&mut ck),
        2 => counterexample(&mut ck, f),
        3 => nem_x0_rays(&mut ck),
        4 => inductive(&mut ck),
        5 => nem_x1(&mut ck, f),
        6 => x1_certificates(&mut ck),
        7 => x52(&mut ck),
        8 => xn2(&mut ck),
        9 => genus(&mut ck),
        10 => m21(&mut ck, f),
        11 => l7(&mut ck, f),
        12 => containment(&mut ck, f),
        _ => formats(&mut ck, f),
    }
    CriterionReport { number, title, section, checks: ck.0, millis: start.elapsed().as_millis() }
}

type Out = Result<(bool, String), String>;

struct Checks(Vec<Check>);

impl Checks {
    fn add(&mut self, label: impl Into<String>, body: impl FnOnce() -> Out) {
        let (passed, detail) = body().unwrap_or_else(|e| (false, format!("error: {e}")));
        self.0.push(Check { label: label.into(), passed, detail });
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn sp(n: usize, m: usize) -> Result<SpaceId, String> {
    SpaceId::new(n, m).map_err(err)
}

fn show_set(v: &[RatVector]) -> String {
    v.iter().map(|r| fmt_vec(r)).collect::<Vec<_>>().join(" ")
}

fn sorted(rows: &[&[i64]]) -> Vec<RatVector> {
    let mut v: Vec<RatVector> = rows.iter().map(|r| qv(r)).collect();
    v.sort();
    v
}

fn equal_sets(label: &str, got: Vec<RatVector>, want: Vec<RatVector>) -> (bool, String) {
    if got == want {
        (true, format!("{label} = {}", show_set(&got)))
    } else {
        (false, format!("{label}: computed {}, expected {}", show_set(&got), show_set(&want)))
    }
}

fn rays_of(c: &RatCone) -> Result<Vec<RatVector>, String> {
    let c = c.canonical().map_err(err)?;
    Ok(c.rays().map_err(err)?.to_vec())
}

fn table(ck: &mut Checks) {
    for m in 0..=3usize {
        ck.add(format!("X_{{n,{m}}}"), || {
            let mut bad = Vec::new();
            for n in 5..=12usize {
                let spec = relations_and_basis(sp(n, m)?).map_err(err)?;
                let (rho, bd) = match m {
                    0 => (n / 2 - 1, n / 2 - 1),
                    1 => (n - 3, n - 3),
                    2 => (2 * n - 7, 2 * n - 6),
                    _ => (4 * n - 16, 4 * n - 13),
                };
                let got = (spec.picard_number(), spec.boundary_count());
                if got != (rho, bd) {
                    bad.push(format!("n = {n}: got {got:?}, expected {:?}", (rho, bd)));
                }
            }
            Ok((bad.is_empty(), if bad.is_empty() { "n = 5..12 agree".into() } else { bad.join("; ") }))
        });
    }
}

fn counterexample(ck: &mut Checks, f: &Fixtures) {
    ck.add("3·D²_12 on X_{6,3}", || {
        let s = sp(6, 3)?;
        let spec = relations_and_basis(s).map_err(err)?;
        let l = BoundaryLabel::new(s, 2, &[1, 2]).map_err(err)?;
        let v: RatVector = spec.label_coords(&l).map_err(err)?.iter().map(|x| x * q(3, 1)).collect();
        let want = qv(&[-1, 1, 1, 0, -3, 1, 1, -1]);
        Ok((v == want, format!("computed {}, expected {}", fmt_vec(&v), fmt_vec(&want))))
    });
    ck.add("π_*F_τ on X_{6,3}", || {
        let c = counterexample_ftau(f, 6).map_err(err)?;
        let want: RatVector = qv(&[0, 0, 0, 1, -3, -1, -1, 1]).iter().map(|x| x * q(2, 1)).collect();
        Ok((c.class.coords == want, format!("computed {}, expected {}", fmt_vec(&c.class.coords), fmt_vec(&want))))
    });
    for n in 6..=8 {
        ck.add(format!("separating functional, n = {n}"), || {
            let c = counterexample_ftau(f, n).map_err(err)?;
            Ok((c.verified(), format!("class {}; {}", fmt_vec(&c.class.coords), c.certificate.describe())))
        });
    }
    for n in 7..=8 {
        ck.add(format!("first four coordinates vanish, n = {n}"), || {
            let c = counterexample_ftau(f, n).map_err(err)?;
            let head = &c.class.coords[..4];
            Ok((head.iter().all(|x| *x == q(0, 1)), format!("class {}", fmt_vec(&c.class.coords))))
        });
    }
}

fn nem_x0_rays(ck: &mut Checks) {
    let printed: [(usize, &[&[i64]]); 4] = [
        (6, &[&[2, 1], &[1, 3]]),
        (7, &[&[5, 3], &[1, 3]]),
        (8, &[&[3, 2, 4], &[1, 3, 6], &[5, 15, 9], &[15, 10, 6]]),
        (9, &[&[1, 3, 2], &[1, 3, 6], &[7, 5, 10], &[21, 15, 10]]),
    ];
    for (n, rays) in printed {
        ck.add(format!("n = {n}"), || {
            let got = rays_of(&nem_cone(sp(n, 0)?).map_err(err)?)?;
            Ok(equal_sets("rays", got, sorted(rays)))
        });
    }
}

fn inductive(ck: &mut Checks) {
    for n in 6..=14usize {
        ck.add(format!("n = {n}"), || {
            let mut ind = nem_rays_inductive(n).map_err(err)?;
            ind.sort();
            let dd = rays_of(&nem_cone(sp(n, 0)?).map_err(err)?)?;
            let want = 1usize << (n / 2 - 2);
            Ok((ind.len() == want && ind == dd, format!("{} inductive rays (expected {want}), {} from DD", ind.len(), dd.len())))
        });
    }
}

fn nem_x1(ck: &mut Checks, f: &Fixtures) {
    ck.add("n = 5", || {
        let want = RatCone::from_hrep(2, vec![qv(&[-1, 3]), qv(&[1, 0])], vec![]).map_err(err)?;
        let got = nem_cone(sp(5, 1)?).map_err(err)?;
        let eq = got.equals(&want).map_err(err)?.is_equal();
        Ok((eq, format!("rays {}", show_set(&rays_of(&got)?))))
    });
    ck.add("n = 6", || {
        let got = rays_of(&nem_cone(sp(6, 1)?).map_err(err)?)?;
        Ok(equal_sets("rays", got, sorted(&[&[6, 3, 1], &[1, 3, 1], &[0, 1, 1], &[1, 3, 6], &[2, 1, 2]])))
    });
    ck.add("n = 7", || {
        let h = nem_hrep(sp(7, 1)?).map_err(err)?;
        let rows = h.inequalities().map_err(err)?.len();
        let got = rays_of(&h)?;
        let mut want = f.claim("nem_X7_1").map_err(err)?.ray_vectors();
        want.sort();
        let (ok, d) = equal_sets("rays", got, want);
        Ok((ok && rows == 9, format!("{rows} inequalities; {d}")))
    });
}

fn x1_certificates(ck: &mut Checks) {
    for n in 5..=12usize {
        ck.add(format!("n = {n}"), || {
            let sys = nem_full_system(n).map_err(err)?;
            let reduced = nem_hrep(sp(n, 1)?).map_err(err)?;
            let ok = sys.verify();
            let same = sys.same_cone_as(reduced.inequalities().map_err(err)?);
            Ok((
                ok && same,
                format!("{} rows, {} certificates verify: {ok}; same cone as reduced system: {same}", sys.rows.len(), sys.certificates.len()),
            ))
        });
    }
}

fn x52(ck: &mut Checks) {
    ck.add("3b₂ = b*₂ + b*₃ − b₃", || {
        let s = sp(5, 2)?;
        let spec = relations_and_basis(s).map_err(err)?;
        let l = BoundaryLabel::new(s, 2, &[1, 2]).map_err(err)?;
        let v: RatVector = spec.label_coords(&l).map_err(err)?.iter().map(|x| x * q(3, 1)).collect();
        Ok((spec.names() == ["b3", "b*2", "b*3"] && v == qv(&[-1, 1, 1]), format!("basis {:?}, 3b₂ = {}", spec.names(), fmt_vec(&v))))
    });
    ck.add("Eff has 4 generators", || {
        let r = rays_of(&eff_cone(sp(5, 2)?).map_err(err)?)?;
        Ok((r.len() == 4, show_set(&r)))
    });
    ck.add("dual of Eff equals the nef description", || {
        let s = sp(5, 2)?;
        let cover = surface_nef_from_cover(s).map_err(err)?;
        let gram = surface_nef_via_gram(s).map_err(err)?;
        let eq = cover.equals(&gram).map_err(err)?.is_equal();
        Ok((eq, format!("nef rays {}", show_set(&rays_of(&cover)?))))
    });
}

fn xn2(ck: &mut Checks) {
    for n in 5..=10usize {
        ck.add(format!("n = {n}"), || {
            let d = eff_xn2_derivation(n).map_err(err)?;
            Ok((d.verify() && d.combinations.len() == n - 3, format!("{} combinations (j = 2..{})", d.combinations.len(), n - 2)))
        });
    }
}

fn genus(ck: &mut Checks) {
    ck.add("i_*C_k two routes, g = 2..5", || {
        for g in 2..=5usize {
            let m = hyperelliptic_pushforward(g).map_err(err)?;
            let s = sp(2 * g + 2, 0)?;
            for k in 1..2 * g {
                let a = m.apply(&curve_ck(s, k).map_err(err)?.coords).map_err(err)?;
                let b = hyperelliptic_curve_image(g, k).map_err(err)?.coords;
                if a != b {
                    return Ok((false, format!("g = {g}, k = {k}: {} vs {}", fmt_vec(&a), fmt_vec(&b))));
                }
            }
        }
        Ok((true, "all agree".into()))
    });
    ck.add("p_*C_k two routes, g = 2..5", || {
        for target in [Target::Mg, Target::Mg1] {
            for g in 2..=5usize {
                let top = if target == Target::Mg { g - 1 } else { g };
                for n in 1..=top {
                    let m = pointed_pushforward(g, n, target).map_err(err)?;
                    let s = sp(2 * n + 3, 1)?;
                    for k in 1..=2 * n {
                        let a = m.apply(&curve_ck(s, k).map_err(err)?.coords).map_err(err)?;
                        let b = pointed_curve_image(g, n, target, k).map_err(err)?.coords;
                        if a != b {
                            return Ok((false, format!("{target:?} g = {g}, n = {n}, k = {k}: {} vs {}", fmt_vec(&a), fmt_vec(&b))));
                        }
                    }
                }
            }
        }
        Ok((true, "all agree".into()))
    });
    ck.add("c₁, c₂ ≥ 0 for 3 ≤ n ≤ 20", || {
        for n in 3..=20i64 {
            for k in 1..n {
                for m in 0..k {
                    let (c1, c2) = c_coefficients(n, k, m);
                    if c1 < 0 || c2 < 0 {
                        return Ok((false, format!("n = {n}, k = {k}, m = {m}: ({c1}, {c2})")));
                    }
                }
            }
        }
        Ok((c_coefficients(2, 1, 0) == (1, 2), "nonnegative; (c₁, c₂) = (1, 2) at n = 2".into()))
    });
    ck.add("2(5n²−13n+6) identity", || Ok((reduction_identity_holds(), "checked on a 5×5×5 grid (degree ≤ 2 per variable)".into())));
    ck.add("reduction certificates, 3 ≤ n ≤ 20", || {
        for n in 3..=20usize {
            let r = family_reductions(n + 1, n, Target::Mg).map_err(err)?;
            if !r.iter().all(Reduction::verifies) {
                return Ok((false, format!("n = {n}")));
            }
        }
        Ok((true, "every (k, m) certificate verifies".into()))
    });
    ck.add("families and reductions", || {
        for (target, g, n) in [(Target::Mg, 3, 2), (Target::Mg, 5, 3), (Target::Mg, 6, 5), (Target::Mg1, 2, 2), (Target::Mg1, 4, 4)] {
            let fam = mg1_inequality_family(g, n, target).map_err(err)?;
            if !fam.families_match() || !fam.reductions_verify() {
                return Ok((false, format!("{target:?} g = {g}, n = {n}")));
            }
        }
        Ok((true, "pushed rows equal the families; reductions verify".into()))
    });
}

fn m21(ck: &mut Checks, f: &Fixtures) {
    let cones = m21_cones(f);
    let c = cones.as_ref().map_err(err);
    ck.add("pushed Nem(X_{7,1}) hull", || {
        let c = c.clone()?;
        Ok(equal_sets("extremal rays", rays_of(&c.push_nem)?, sorted(&[&[1, 1, 0], &[1, 6, 0], &[1, 6, 20], &[3, 3, 10]])))
    });
    ck.add("pushed Nef(X_{7,1}) hull", || {
        let c = c.clone()?;
        Ok(equal_sets("extremal rays", rays_of(&c.push_nef)?, sorted(&[&[1, 1, 0], &[1, 6, 0], &[1, 6, 20]])))
    });
    ck.add("pushed Nem(X_{7,1}) = claimed Nem(M̄_{2,1})", || {
        let c = c.clone()?;
        let claim = f.claim("nem_M2_1").map_err(err)?.cone("M2_1").map_err(err)?;
        Ok(equal_sets("extremal rays", rays_of(&c.push_nem)?, rays_of(&claim)?))
    });
    ck.add("pulled-back Nem inequalities cut out Nef(M̄_{2,1})", || {
        let c = c.clone()?;
        let cor = corollary_cone_m21().map_err(err)?;
        Ok(equal_sets("extremal rays", rays_of(&cor)?, rays_of(&c.nef)?))
    });
    ck.add("(5,12,6,2) ↦ (1,6,5)", || {
        let v = m21_pushforward(&qv(&[5, 12, 6, 2])).map_err(err)?;
        Ok((v == qv(&[1, 6, 5]), fmt_vec(&v)))
    });
    ck.add("C = ¾B + ¼D", || {
        let c = c.clone()?;
        let comb: RatVector =
            qv(&[1, 6, 0]).iter().zip(qv(&[1, 6, 20])).map(|(b, d)| b * q(3, 4) + d * q(1, 4)).collect();
        let ok = comb == qv(&[1, 6, 5]) && c.c_in_push_nef.is_membership();
        Ok((ok, format!("¾B + ¼D = {}; {}", fmt_vec(&comb), c.c_in_push_nef.describe())))
    });
    ck.add("⟨K, C₂⟩ = 0 and the face C₂⊥", || {
        let d = x71_mori_data(f).map_err(err)?;
        let face = rays_of(&d.face)?;
        let (ok, detail) = equal_sets("face", face, sorted(&[&[0, 2, 1, 2], &[5, 12, 6, 2], &[10, 6, 3, 1]]));
        Ok((ok && d.k_dot_c2 == q(0, 1) && d.c1_dot_b3 == q(-1, 1), format!("⟨K,C₂⟩ = {}, ⟨C₁,b₃⟩ = {}; {detail}", d.k_dot_c2, d.c1_dot_b3)))
    });
}

fn l7(ck: &mut Checks, f: &Fixtures) {
    ck.add("primitive image", || {
        let (_, ray) = class_l7(f).map_err(err)?;
        Ok((ray == qv(&[10, 6, 3, 1]), fmt_vec(&ray)))
    });
}

/// Every generator of `small` is certified inside `big`.
fn certified_inside(small: &[RatVector], big: &RatCone) -> Result<(bool, usize), String> {
    let big = big.canonical().map_err(err)?;
    let (rays, lin) = (big.rays().map_err(err)?, big.lineality().map_err(err)?);
    let mut ok = true;
    for v in small {
        let c = certify_membership(rays, lin, v);
        ok &= c.is_membership() && c.verify(rays, lin, v);
    }
    Ok((ok, small.len()))
}

fn containment(ck: &mut Checks, f: &Fixtures) {
    for (name, fc) in &f.nef {
        let Ok(Some(s)) = fc.space() else { continue };
        ck.add(format!("{name}: Nef ⊆ Nem ⊆ Eff"), || {
            let nem = nem_cone(s).map_err(err)?;
            let eff = eff_cone(s).map_err(err)?;
            let (a, na) = certified_inside(&fc.ray_vectors(), &nem)?;
            let (b, nb) = certified_inside(&rays_of(&nem)?, &eff)?;
            Ok((a && b, format!("{na} nef rays in Nem: {a}; {nb} nem rays in Eff: {b}")))
        });
    }
    ck.add("M2_1: Nef ⊆ p_*Nem ⊆ Eff", || {
        let c = m21_cones(f).map_err(err)?;
        let (a, _) = certified_inside(&rays_of(&c.nef)?, &c.push_nem)?;
        let (b, _) = certified_inside(&rays_of(&c.push_nem)?, &c.eff)?;
        Ok((a && b, format!("Nef in p_*Nem: {a}; p_*Nem in Eff: {b}")))
    });
}

fn formats(ck: &mut Checks, f: &Fixtures) {
    let mut cones: Vec<(String, Result<RatCone, String>)> = Vec::new();
    for n in 6..=9 {
        cones.push((format!("Nem(X_{{{n},0}})"), sp(n, 0).and_then(|s| nem_cone(s).map_err(err))));
    }
    for n in 5..=8 {
        cones.push((format!("Nem(X_{{{n},1}})"), sp(n, 1).and_then(|s| nem_cone(s).map_err(err))));
    }
    cones.push(("Eff(X_{5,2})".into(), sp(5, 2).and_then(|s| eff_cone(s).map_err(err))));
    cones.push(("p_*Nem(X_{7,1})".into(), m21_cones(f).map(|c| c.push_nem).map_err(err)));
    for (name, cone) in cones {
        ck.add(name, || {
            let c = cone?.canonical().map_err(err)?;
            let mut parts = Vec::new();
            for which in [porta::Which::Hrep, porta::Which::Vrep] {
                let a = porta::write(&c, which).map_err(err)?;
                let back = porta::read::<Rational>(&a).map_err(err)?.canonical().map_err(err)?;
                let b = porta::write(&back, which).map_err(err)?;
                parts.push(a == b);
            }
            let a = json::write(&c).map_err(err)?;
            let back = json::read::<Rational>(&a).map_err(err)?.canonical().map_err(err)?;
            parts.push(json::write(&back).map_err(err)? == a);
            Ok((parts.iter().all(|&x| x), format!("ieq/poi/json byte-identical: {parts:?}")))
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn section_names_round_trip() {
        for s in Section::ALL {
            assert_eq!(s.name().parse::<Section>().unwrap(), s);
        }
        assert!("bogus".parse::<Section>().is_err());
    }

    #[test]
    fn filter_and_order() {
        let r = run(Fixtures::builtin(), Some(&[Section::M21, Section::Table]));
        let nums: Vec<usize> = r.criteria.iter().map(|c| c.number).collect();
        assert_eq!(nums, vec![1, 10, 11]);
        assert!(r.criteria.iter().all(CriterionReport::passed), "{}", r.render(false));
        assert_eq!(r.render(false), run(Fixtures::builtin(), Some(&[Section::M21, Section::Table])).render(false));
    }

    #[test]
    fn corrupted_fixture_names_the_check() {
        let text = include_str!("../data/fixtures.toml").replace("[10, 6, 3, 1], [5, 3, 4, 3]", "[10, 6, 3, 2], [5, 3, 4, 3]");
        let f = Fixtures::parse(&text).unwrap();
        let r = run(&f, Some(&[Section::M21]));
        let text = r.render(false);
        assert!(!r.passed());
        assert!(text.contains("FAIL 10"), "{text}");
    }
}
