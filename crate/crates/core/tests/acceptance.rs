//! Acceptance suite. Runs each criterion, prints one PASS/FAIL line apiece and
//! exits nonzero if any criterion fails.

use std::fs;
use std::path::Path;
use std::time::Instant;

use vncore::catalog::{self, TWIST_SEED};
use vncore::cli::{self, emit_structure, parse_structure_str};
use vncore::fusion::{
    check_identity, fourier_l, fusion_f, fusion_g, generalized_inverse, IdentityId,
    PROP5_ASSUMPTION,
};
use vncore::structures::{check_axiom, classify, AxiomId, CheckResult, Label, Structure};
use vncore::tensor::LinMap;
use vncore::Scalar;

type Outcome = Result<Vec<String>, String>;
type Criterion = (&'static str, fn() -> Outcome);

/// Catalog entries plus the two completions.
fn everything() -> Vec<Structure> {
    let mut all: Vec<Structure> = catalog::NAMES.iter().map(|n| catalog::by_name(n).unwrap()).collect();
    for base in ["leftzero2", "rectband22"] {
        all.push(catalog::unitalize(&catalog::by_name(base).unwrap()).unwrap());
    }
    all
}

fn get(name: &str) -> Structure {
    match name.strip_suffix("+u") {
        Some(base) => catalog::unitalize(&catalog::by_name(base).unwrap()).unwrap(),
        None => catalog::by_name(name).unwrap(),
    }
}

fn expect(s: &Structure, what: &str, r: &CheckResult, pass: bool) -> Result<(), String> {
    if r.passed() == pass {
        return Ok(());
    }
    let detail = match (&r.witness, &r.reason) {
        (Some(w), _) => w.render(s).to_string(),
        (None, Some(reason)) => reason.clone(),
        _ => String::new(),
    };
    Err(format!("{}: {what} is {} ({detail})", s.name(), r.verdict))
}

fn identity(s: &Structure, id: IdentityId, pass: bool) -> Result<(), String> {
    expect(s, id.as_str(), &check_identity(s, id), pass)
}

fn axiom(s: &Structure, id: AxiomId, pass: bool) -> Result<(), String> {
    expect(s, id.as_str(), &check_axiom(s, id), pass)
}

fn witness_line(s: &Structure, r: &CheckResult) -> Result<String, String> {
    let w = r.witness.as_ref().ok_or_else(|| format!("{}: FAIL without witness", s.name()))?;
    Ok(w.render(s).to_string())
}

fn fgf_on_vn_cores() -> Outcome {
    let names = [
        "trivial", "z2", "z3", "s3", "klein4", "sweedler", "leftzero2", "rectband22", "groupoid2",
        "leftzero2+u",
    ];
    for name in names {
        let s = get(name);
        if !classify(&s).has(Label::VnCore) {
            return Err(format!("{name} is not classified vn_core"));
        }
        identity(&s, IdentityId::FgfF, true)?;
    }
    Ok(vec![format!("fgf_f PASS on {} vn_core structures", names.len())])
}

fn gf_on_unital_cores() -> Outcome {
    let mut notes = Vec::new();
    let mut unital = Vec::new();
    for s in everything() {
        if classify(&s).has(Label::UnitalVnCore) {
            identity(&s, IdentityId::GfId, true)?;
            unital.push(s.name().to_string());
        }
    }
    for name in ["trivial", "z2", "z3", "s3", "klein4"] {
        if !unital.iter().any(|u| u == name) {
            return Err(format!("{name} should be a unital vn_core"));
        }
    }
    notes.push(format!("gf_id PASS on {}", unital.join(", ")));
    for name in ["leftzero2", "groupoid2"] {
        let s = get(name);
        let r = check_identity(&s, IdentityId::GfId);
        expect(&s, "gf_id", &r, false)?;
        notes.push(format!("{name} gf_id FAIL: {}", witness_line(&s, &r)?));
    }
    Ok(notes)
}

fn gfg_sufficiency() -> Outcome {
    for name in ["z2", "z3", "s3", "klein4"] {
        let s = get(name);
        axiom(&s, AxiomId::SSquared, true)?;
        axiom(&s, AxiomId::Antipode, true)?;
        identity(&s, IdentityId::GfgG, true)?;
    }
    let s = get("sweedler");
    identity(&s, IdentityId::GfgG, true)?;
    axiom(&s, AxiomId::SSquared, false)?;
    Ok(vec!["sweedler: gfg_g PASS with s_squared FAIL".into()])
}

fn fourier() -> Outcome {
    for name in ["sweedler", "s3"] {
        identity(&get(name), IdentityId::FourierHom, true)?;
    }
    for s in everything() {
        if fourier_l(&s.id(1), &s).map_err(|e| e.to_string())? != fusion_f(&s) {
            return Err(format!("{}: l(1) != f", s.name()));
        }
        let anti = s.require_antipode().map_err(|e| e.to_string())?;
        let lhs = fourier_l(anti, &s).map_err(|e| e.to_string())?;
        if lhs != fusion_g(&s).map_err(|e| e.to_string())? {
            return Err(format!("{}: l(S) != g", s.name()));
        }
    }
    Ok(vec!["fourier_hom PASS on sweedler, s3; l(1) = f and l(S) = g everywhere".into()])
}

fn very_weak_hopf() -> Outcome {
    let s = get("groupoid2");
    for a in [AxiomId::VwhLeft, AxiomId::VwhRight, AxiomId::VwhS] {
        axiom(&s, a, true)?;
    }
    for i in [IdentityId::OneStarT, IdentityId::SStar1StarS, IdentityId::FgfF, IdentityId::GfgG] {
        identity(&s, i, true)?;
    }
    let r = check_axiom(&s, AxiomId::Antipode);
    expect(&s, "antipode", &r, false)?;
    Ok(vec![format!("groupoid2 antipode FAIL: {}", witness_line(&s, &r)?)])
}

fn fusion_equation() -> Outcome {
    let mut hit = Vec::new();
    for s in everything() {
        if classify(&s).has(Label::Semibialgebra) {
            identity(&s, IdentityId::FusionEq, true)?;
            hit.push(s.name().to_string());
        }
    }
    Ok(vec![format!("fusion_eq PASS on {}", hit.join(", "))])
}

fn chain(maps: &[&LinMap]) -> LinMap {
    LinMap::chain(maps).unwrap()
}

fn generalized_inverses() -> Outcome {
    let mut hit = Vec::new();
    for s in everything() {
        let f = fusion_f(&s);
        let g = fusion_g(&s).map_err(|e| e.to_string())?;
        if chain(&[&f, &g, &f]) != f {
            continue;
        }
        let h = generalized_inverse(&f, &g).map_err(|e| format!("{}: {e}", s.name()))?;
        if h != chain(&[&g, &f, &g]) || chain(&[&f, &h, &f]) != f || chain(&[&h, &f, &h]) != h {
            return Err(format!("{}: h = gfg is not a generalized inverse", s.name()));
        }
        hit.push(s.name().to_string());
    }
    Ok(vec![format!("fhf = f and hfh = h on {}", hit.join(", "))])
}

fn quasi() -> Outcome {
    let mut notes = Vec::new();
    let k = get("klein4");
    let found = catalog::search_twist(&k, TWIST_SEED)
        .map_err(|e| e.to_string())?
        .ok_or("no invertible twist found for klein4")?;
    let t = catalog::twist(&k, &found.data).map_err(|e| e.to_string())?;
    axiom(&t, AxiomId::DrinfeldAlpha, true)?;
    axiom(&t, AxiomId::DrinfeldBeta, true)?;
    let verdicts = |s: &Structure| {
        [AxiomId::QuasiLeft, AxiomId::QuasiRight]
            .map(|a| format!("{a}={}", check_axiom(s, a).verdict))
            .into_iter()
            .chain(
                [IdentityId::QuasiConvAssoc, IdentityId::LAlphaMult, IdentityId::LBetaMult]
                    .map(|i| format!("{i}={}", check_identity(s, i).verdict)),
            )
            .collect::<Vec<_>>()
            .join(" ")
    };
    notes.push(format!(
        "klein4 twist (attempt {}): drinfeld PASS, coassoc {}; {}",
        found.attempt,
        check_axiom(&t, AxiomId::Coassoc).verdict,
        verdicts(&t)
    ));
    if found.coassociative {
        notes.push("klein4 is commutative, so every twist leaves coassoc intact".into());
    }
    let sw = get("sweedler");
    let found = catalog::search_twist(&sw, TWIST_SEED).map_err(|e| e.to_string())?;
    if let Some(found) = found.filter(|f| !f.coassociative) {
        let t = catalog::twist(&sw, &found.data).map_err(|e| e.to_string())?;
        axiom(&t, AxiomId::Coassoc, false)?;
        axiom(&t, AxiomId::DrinfeldAlpha, true)?;
        axiom(&t, AxiomId::DrinfeldBeta, true)?;
        notes.push(format!(
            "sweedler twist (attempt {}): coassoc FAIL, drinfeld PASS; {}",
            found.attempt,
            verdicts(&t)
        ));
    }
    for s in everything() {
        if !classify(&s).has(Label::Hopf) {
            continue;
        }
        let trivial = catalog::TwistData::trivial(&s).map_err(|e| e.to_string())?;
        let t = catalog::twist(&s, &trivial).map_err(|e| e.to_string())?;
        if t.delta() != s.delta() || t.mu() != s.mu() || t.antipode() != s.antipode() {
            return Err(format!("{}: trivial twist changed the structure", s.name()));
        }
        let alpha_is_unit = t.alpha() == s.unit() && t.beta() == s.unit();
        if !alpha_is_unit {
            return Err(format!("{}: trivial twist gives α, β ≠ η", s.name()));
        }
    }
    notes.push("trivial twist reproduces every Hopf entry".into());
    Ok(notes)
}

fn completion() -> Outcome {
    for name in ["leftzero2+u", "rectband22+u"] {
        let s = get(name);
        for a in [AxiomId::Assoc, AxiomId::Coassoc, AxiomId::Compat, AxiomId::Unit, AxiomId::VnCore] {
            axiom(&s, a, true)?;
        }
    }
    Ok(vec![])
}

fn prop5() -> Outcome {
    let mut notes = Vec::new();
    for s in everything() {
        let r = check_identity(&s, IdentityId::Prop5);
        if r.note.as_deref() != Some(PROP5_ASSUMPTION) {
            return Err(format!("{}: prop5 result lacks the assumption note", s.name()));
        }
        if ["trivial", "z2", "z3", "s3", "klein4", "sweedler"].contains(&s.name()) {
            expect(&s, "prop5", &r, true)?;
        }
        if s.name() == "groupoid2" {
            let w = r.witness.as_ref().map(|w| format!(": {}", w.render(&s))).unwrap_or_default();
            notes.push(format!("groupoid2 prop5 {}{w} [note: {}]", r.verdict, PROP5_ASSUMPTION));
        }
    }
    Ok(notes)
}

fn run(argv: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cli::run(std::iter::once("vncore").chain(argv.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn cli_examples() -> Outcome {
    for s in everything() {
        let text = emit_structure(&s);
        let back = parse_structure_str(&text).map_err(|e| e.to_string())?;
        if emit_structure(&back) != text {
            return Err(format!("{}: emit/parse round trip differs", s.name()));
        }
    }
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = |name: &str| dir.path().join(format!("{name}.json"));
    for name in ["z2", "z3_bad_s", "leftzero2"] {
        let p = path(name);
        let (code, _, err) = run(&["catalog", "emit", name, "-o", p.to_str().unwrap()]);
        if code != 0 {
            return Err(format!("catalog emit {name} exited {code}: {err}"));
        }
        let text = fs::read_to_string(&p).map_err(|e| e.to_string())?;
        if text != emit_structure(&get(name)) {
            return Err(format!("{name}: CLI emit differs from library emit"));
        }
    }
    let arg = |p: &Path| p.to_str().unwrap().to_string();
    let cases: [(Vec<String>, i32, &str); 3] = [
        (vec!["check".into(), arg(&path("z2")), "--axiom".into(), "all".into()], 0, ""),
        (vec!["check".into(), arg(&path("z3_bad_s")), "--axiom".into(), "vn_core".into()], 1, "≠"),
        (
            vec!["identity".into(), arg(&path("leftzero2")), "--id".into(), "fgf_f,gf_id".into()],
            1,
            "≠",
        ),
    ];
    let mut notes = Vec::new();
    for (argv, want, needle) in cases {
        let argv: Vec<&str> = argv.iter().map(String::as_str).collect();
        let (code, out, err) = run(&argv);
        if code != want || !out.contains(needle) {
            return Err(format!("{} exited {code} (want {want}): {out}{err}", argv.join(" ")));
        }
        let file = Path::new(argv[1]).file_name().unwrap().to_string_lossy();
        notes.push(format!("{} {file} {} → exit {code}", argv[0], argv[3]));
    }
    Ok(notes)
}

fn negative_controls() -> Outcome {
    let s = get("z3_bad_s");
    let r = check_axiom(&s, AxiomId::VnCore);
    expect(&s, "vn_core", &r, false)?;
    let mut notes = vec![format!("z3_bad_s vn_core FAIL: {}", witness_line(&s, &r)?)];

    let sw = get("sweedler");
    axiom(&sw, AxiomId::Antipode, true)?;
    let mut raw = sw.to_raw();
    let anti = raw.antipode.as_mut().unwrap();
    // S(x) = −gx becomes +gx.
    anti.set(3, 2, Scalar::from_i64(sw.field(), 1));
    let mutated = raw.build().map_err(|e| e.to_string())?;
    let r = check_axiom(&mutated, AxiomId::Antipode);
    expect(&mutated, "antipode after mutation", &r, false)?;
    notes.push(format!("mutated sweedler antipode FAIL: {}", witness_line(&mutated, &r)?));
    Ok(notes)
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("fgf = f on every vn_core", fgf_on_vn_cores),
        ("gf = 1 on unital vn_cores, with negative controls", gf_on_unital_cores),
        ("gfg = g without S² = 1", gfg_sufficiency),
        ("Fourier transform is multiplicative", fourier),
        ("very weak Hopf groupoid", very_weak_hopf),
        ("fusion equation on semibialgebras", fusion_equation),
        ("generalized inverse h = gfg", generalized_inverses),
        ("quasi suite and twists", quasi),
        ("unitalization", completion),
        ("prop5 instance reports", prop5),
        ("CLI round trip and exit codes", cli_examples),
        ("negative-control integrity", negative_controls),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        match check() {
            Ok(notes) => {
                println!("PASS {:>2} {title} ({:.2?})", i + 1, t.elapsed());
                for n in notes {
                    println!("        {n}");
                }
            }
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {title}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed in {:.2?}", criteria.len() - failed, criteria.len(), start.elapsed());
    if failed > 0 {
        std::process::exit(1);
    }
}
