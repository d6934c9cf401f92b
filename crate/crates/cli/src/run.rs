//! Command execution: each command produces a deterministic structured
//! report and an outcome class that maps onto the process exit code.

use crate::jobspec::JobSpec;
use xcoh_core::acceptance;
use xcoh_core::butterfly::{
    base_object_semidirect, cocycle_from_zobject, compose_zarrows, find_zarrow, identity_zarrow,
    self_arrow_two_classes, star_objects, symmetric_braiding, two_arrows_between, validate_zarrow,
    validate_zobject, zobject_from_cocycle, ZObject,
};
use xcoh_core::cocycle::{h_minus1, h_one, h_zero, z1_orbits, Cochain1, CohomologySet};
use xcoh_core::document::{key_str, Doc};
use xcoh_core::error::{Budget, Error};
use xcoh_core::exact::p_short_check;
use xcoh_core::kcomplex::{build_k1, build_k1_braided, validate_2cm, validate_k1};
use xcoh_core::report::ValidationReport;
use xcoh_core::xmod::{
    validate_braiding, validate_identities, Braiding, BraidingLevel, GammaCrossedModule,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    VerificationFailure,
    InputError,
    BudgetExceeded,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Success => 0,
            Outcome::VerificationFailure => 1,
            Outcome::InputError => 2,
            Outcome::BudgetExceeded => 3,
        }
    }
}

fn classify_error(e: &Error) -> Outcome {
    match e {
        Error::Budget { .. } => Outcome::BudgetExceeded,
        _ => Outcome::InputError,
    }
}

fn emit_violations(doc: &mut Doc, rep: &ValidationReport) {
    doc.begin(&rep.subject.replace(' ', "_"));
    doc.kv("violations", rep.violations.len());
    for v in &rep.violations {
        doc.kv_str("violated", format!("{} [{}]", v.axiom, v.witness));
    }
    doc.end();
}

fn emit_cohomology_set(doc: &mut Doc, name: &str, set: &CohomologySet) {
    doc.begin(name);
    doc.kv("degree", set.degree);
    doc.kv("order", set.order());
    if let Some(ab) = set.abelian {
        doc.kv("abelian", ab);
    }
    for (i, rep) in set.reps.iter().enumerate() {
        doc.kv_str(&format!("class_{i}"), key_str(rep));
    }
    if let Some(g) = &set.group {
        for a in g.elements() {
            let row: Vec<usize> = g.elements().map(|b| g.mul(a, b)).collect();
            doc.list(&format!("table_{a}"), row);
        }
    }
    doc.end();
}

fn conventions(doc: &mut Doc) {
    doc.begin("conventions");
    doc.kv_str(
        "rho_formula",
        "rho(s, a) = p(s) * d(s . a), derived by candidate search",
    );
    doc.kv_str(
        "extension_factor_set",
        "E uses the twisted factor set (st)^-1 . eps(s, t)",
    );
    doc.kv_str(
        "degree_sequence_reading",
        "plain groups in the degree sequence are read in degree 0",
    );
    doc.kv_str(
        "connecting_maps",
        "lexicographically least lifts through the four-term sequence",
    );
    doc.end();
}

/// Determine the strongest braiding level the bracket satisfies, if any.
fn braiding_level(gx: &GammaCrossedModule, br: &Braiding) -> Option<BraidingLevel> {
    [
        BraidingLevel::Picard,
        BraidingLevel::Symmetric,
        BraidingLevel::Braided,
    ]
    .into_iter()
    .find(|&level| validate_braiding(&gx.base, br, level, Some(gx)).ok())
}

pub fn run_cohomology(spec: &JobSpec, budget: Budget) -> (String, Outcome) {
    let gx = &spec.coefficients;
    let mut doc = Doc::new();
    doc.begin("report");
    doc.kv_str("command", "cohomology");
    doc.kv_str("coefficients", &spec.coefficients_name);
    let braided = spec
        .braiding
        .as_ref()
        .and_then(|br| braiding_level(gx, br).map(|lvl| (br, lvl)));
    if let Some((_, lvl)) = &braided {
        if let Some(name) = &spec.braiding_name {
            doc.kv_str("braiding", name);
        }
        doc.kv_str("braiding_level", format!("{lvl:?}").to_lowercase());
    }
    let result = (|| -> Result<(), Error> {
        emit_cohomology_set(&mut doc, "h_minus_1", &h_minus1(gx));
        emit_cohomology_set(&mut doc, "h_0", &h_zero(gx, budget)?);
        let h1 = h_one(gx, braided.as_ref().map(|(br, _)| *br), budget)?;
        emit_cohomology_set(&mut doc, "h_1", &h1);
        Ok(())
    })();
    match result {
        Err(e) => {
            doc.kv_str("error", e.to_string());
            doc.end();
            (doc.render(), classify_error(&e))
        }
        Ok(()) => {
            conventions(&mut doc);
            doc.end();
            (doc.render(), Outcome::Success)
        }
    }
}

pub fn run_verify(spec: &JobSpec, budget: Budget) -> (String, Outcome) {
    let gx = &spec.coefficients;
    let mut doc = Doc::new();
    doc.begin("report");
    doc.kv_str("command", "verify");
    doc.kv_str("coefficients", &spec.coefficients_name);
    let mut failures = 0usize;
    let mut track = |doc: &mut Doc, rep: &ValidationReport| {
        if !rep.ok() {
            failures += 1;
        }
        emit_violations(doc, rep);
    };
    let rep = gx.validation_report();
    track(&mut doc, &rep);
    let result = (|| -> Result<(), Error> {
        if let Some(br) = &spec.braiding {
            match braiding_level(gx, br) {
                None => {
                    let rep = validate_braiding(&gx.base, br, BraidingLevel::Braided, Some(gx));
                    track(&mut doc, &rep);
                }
                Some(level) => {
                    doc.kv_str("braiding_level", format!("{level:?}").to_lowercase());
                    let rep = validate_identities(&gx.base, br);
                    track(&mut doc, &rep);
                    let t = build_k1_braided(gx, br, budget)?;
                    let rep = validate_2cm(&t);
                    track(&mut doc, &rep);
                }
            }
        }
        let k = build_k1(gx, budget)?;
        let rep = validate_k1(&k);
        track(&mut doc, &rep);
        Ok(())
    })();
    match result {
        Err(e) => {
            doc.kv_str("error", e.to_string());
            doc.end();
            (doc.render(), classify_error(&e))
        }
        Ok(()) => {
            doc.kv("failed_suites", failures);
            conventions(&mut doc);
            doc.end();
            let outcome = if failures == 0 {
                Outcome::Success
            } else {
                Outcome::VerificationFailure
            };
            (doc.render(), outcome)
        }
    }
}

pub fn run_butterfly(spec: &JobSpec, budget: Budget) -> (String, Outcome) {
    let gx = &spec.coefficients;
    let mut doc = Doc::new();
    doc.begin("report");
    doc.kv_str("command", "butterfly");
    doc.kv_str("coefficients", &spec.coefficients_name);
    let mut ok = true;
    let result = (|| -> Result<(), Error> {
        let orbits = z1_orbits(gx, budget)?;
        doc.kv("cocycles", orbits.cocycles.len());
        doc.kv("classes", orbits.rep_indices.len());
        // one object per class, with its extension order profile
        let mut objects: Vec<(usize, ZObject)> = Vec::new();
        for (cls, &i) in orbits.rep_indices.iter().enumerate() {
            let (z, deriv) = zobject_from_cocycle(gx, &orbits.cocycles[i])?;
            let rep = validate_zobject(gx, &z);
            if !rep.ok() {
                ok = false;
            }
            doc.begin(&format!("object_{cls}"));
            doc.kv_str("cocycle", key_str(&orbits.cocycles[i].key()));
            doc.kv("extension_order", z.e.order());
            doc.list("element_orders", z.e.order_profile());
            doc.kv_str("rho_derivation", &deriv.chosen);
            doc.kv("valid", rep.ok());
            doc.end();
            objects.push((cls, z));
        }
        // translation round trip per class
        for (cls, z) in &objects {
            let s = z.canonical_section(&gx.gamma)?;
            let back = cocycle_from_zobject(gx, z, &s)?;
            let same = orbits.class_of(&back) == Some(*cls);
            if !same {
                ok = false;
            }
            doc.kv(&format!("round_trip_{cls}"), same);
        }
        // the base object recovers H0 and H-1
        let base = base_object_semidirect(gx)?;
        let (_, _, pi1) = self_arrow_two_classes(gx, &base)?;
        let h0 = h_zero(gx, budget)?;
        let h0_match = h0
            .group
            .as_ref()
            .map(|g| pi1.isomorphic_to(g).is_some())
            .unwrap_or(false);
        if !h0_match {
            ok = false;
        }
        doc.kv("self_arrow_classes_match_h0", h0_match);
        let idar = identity_zarrow(&base);
        let autos = two_arrows_between(gx, &base, &idar, &idar);
        let hm1: Vec<usize> = h_minus1(gx).reps.iter().map(|k| k[0]).collect();
        let hm1_match = autos == hm1;
        if !hm1_match {
            ok = false;
        }
        doc.kv("identity_two_arrows_match_h_minus_1", hm1_match);
        // star products when a braiding is attached
        if let Some(br) = &spec.braiding {
            if let Some(level) = braiding_level(gx, br) {
                doc.begin("star");
                let h1 = h_one(gx, Some(br), budget)?;
                let h1g = h1.group.as_ref().expect("braided H1 carries a table");
                let class_pos = |c: &Cochain1| -> usize {
                    let o = orbits.class_of(c).expect("classified");
                    let key = orbits.cocycles[orbits.rep_indices[o]].key();
                    h1.reps.iter().position(|k| k == &key).expect("listed")
                };
                let mut product_ok = true;
                for (ca, za) in &objects {
                    for (cb, zb) in &objects {
                        let s = star_objects(gx, br, za, zb)?;
                        let sec = s.z.canonical_section(&gx.gamma)?;
                        let back = cocycle_from_zobject(gx, &s.z, &sec)?;
                        let a_pos = class_pos(&orbits.cocycles[orbits.rep_indices[*ca]]);
                        let b_pos = class_pos(&orbits.cocycles[orbits.rep_indices[*cb]]);
                        let expect = h1g.mul(a_pos, b_pos);
                        if class_pos(&back) != expect {
                            product_ok = false;
                        }
                    }
                }
                if !product_ok {
                    ok = false;
                }
                doc.kv("classes_multiply", product_ok);
                for a in h1g.elements() {
                    let row: Vec<usize> = h1g.elements().map(|b| h1g.mul(a, b)).collect();
                    doc.list(&format!("class_table_{a}"), row);
                }
                if matches!(level, BraidingLevel::Symmetric | BraidingLevel::Picard) {
                    let mut braid_ok = true;
                    for (_, za) in &objects {
                        for (_, zb) in &objects {
                            let s_ab = star_objects(gx, br, za, zb)?;
                            let s_ba = star_objects(gx, br, zb, za)?;
                            let b1 = symmetric_braiding(gx, br, za, zb, &s_ab, &s_ba)?;
                            if !validate_zarrow(gx, &s_ab.z, &s_ba.z, &b1).ok() {
                                braid_ok = false;
                            }
                            let b2 = symmetric_braiding(gx, br, zb, za, &s_ba, &s_ab)?;
                            if compose_zarrows(&b1, &b2, gx.g0()) != identity_zarrow(&s_ab.z) {
                                braid_ok = false;
                            }
                        }
                    }
                    if !braid_ok {
                        ok = false;
                    }
                    doc.kv("braiding_squares_to_identity", braid_ok);
                }
                doc.end();
            }
        }
        // pushforward along the identity butterfly preserves classes
        let idm = xcoh_core::xmod::StrictXModMorphism::identity(&gx.base);
        let bf = xcoh_core::butterfly::butterfly_from_strict(&idm, Some(gx), Some(gx))?;
        let mut push_ok = true;
        for (cls, z) in &objects {
            let pushed = xcoh_core::butterfly::pushforward_object(&bf, gx, z)?;
            let sec = pushed.z.canonical_section(&gx.gamma)?;
            let back = cocycle_from_zobject(gx, &pushed.z, &sec)?;
            if orbits.class_of(&back) != Some(*cls) {
                push_ok = false;
            }
            if find_zarrow(gx, &pushed.z, z).is_none() {
                push_ok = false;
            }
        }
        if !push_ok {
            ok = false;
        }
        doc.kv("identity_pushforward_preserves_classes", push_ok);
        Ok(())
    })();
    match result {
        Err(e) => {
            doc.kv_str("error", e.to_string());
            doc.end();
            (doc.render(), classify_error(&e))
        }
        Ok(()) => {
            conventions(&mut doc);
            doc.end();
            let outcome = if ok {
                Outcome::Success
            } else {
                Outcome::VerificationFailure
            };
            (doc.render(), outcome)
        }
    }
}

pub fn run_les(spec: &JobSpec, budget: Budget) -> (String, Outcome) {
    let gx = &spec.coefficients;
    let mut doc = Doc::new();
    doc.begin("report");
    doc.kv_str("command", "les");
    doc.kv_str("coefficients", &spec.coefficients_name);
    let result = p_short_check(gx, budget);
    match result {
        Err(e) => {
            doc.kv_str("error", e.to_string());
            doc.end();
            (doc.render(), classify_error(&e))
        }
        Ok(out) => {
            let mut ok = true;
            for (name, rep, les) in [
                (
                    "kernel_cokernel_sequence",
                    &out.ses_reports.0,
                    &out.ker_coker,
                ),
                ("degree_sequence", &out.ses_reports.1, &out.degree),
            ] {
                doc.begin(name);
                doc.kv("sequence_valid", rep.ok());
                if !rep.ok() {
                    ok = false;
                    emit_violations(&mut doc, rep);
                }
                for term in &les.terms {
                    doc.kv(
                        &format!("order_{}", term.name.replace(['(', ')', '-'], "_")),
                        term.set.order(),
                    );
                }
                for (jname, jok) in &les.junctions {
                    doc.kv(
                        &format!("exact_at_{}", jname.replace(['(', ')', '-'], "_")),
                        jok,
                    );
                    if !jok {
                        ok = false;
                    }
                }
                for note in &les.notes {
                    doc.kv_str("note", note);
                }
                doc.end();
            }
            doc.kv("intertwining_ok", out.intertwining.ok());
            if !out.intertwining.ok() {
                ok = false;
                emit_violations(&mut doc, &out.intertwining);
            }
            conventions(&mut doc);
            doc.end();
            let outcome = if ok {
                Outcome::Success
            } else {
                Outcome::VerificationFailure
            };
            (doc.render(), outcome)
        }
    }
}

pub fn run_selftest(budget: Budget) -> (String, Outcome) {
    let outcome = acceptance::run_gate(budget);
    let status = if outcome.all_passed() {
        Outcome::Success
    } else {
        Outcome::VerificationFailure
    };
    (outcome.report, status)
}
