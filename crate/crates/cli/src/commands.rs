use easygram::algebra::numbers::{fmt_rational, parse_rational, rational_to_f64};
use easygram::algebra::{Cyclotomic, Rational};
use easygram::categories::CategoryId;
use easygram::cumulants::{
    bp_map, cauchy_series, check_inversion, cumulants_to_moments_classical, cumulants_to_moments_free,
    moments_to_cumulants_classical, moments_to_cumulants_free, r_series,
};
use easygram::gram::{
    a_exponent, bn_det, difrancesco_det, gram_det_direct, gram_det_symbolic, gram_matrix, gram_matrix_symbolic, gram_rank,
    integrate_monomial, lindstrom_det, on_det, truncated_moment, weingarten_matrix, Factored,
};
use easygram::group_oracle::{
    character_law, cyclic_character_closed, dihedral_character_closed, fix_dim, integrate_exact,
    symmetric_character_closed, truncated_character_closed, truncated_character_law, DiscreteLaw, GroupSpec,
};
use easygram::gram::asymptotic_moment_poly;
use easygram::partition::{ClassFilter, ColoredWord, Partition};
use easygram::prob_laws::{
    bessel_pmf, density, long_moments, moment_polys, moments, poly_to_string, support, DensityGrid, Inverter,
    LawSpec,
};
use easygram::tl_jones::{bracket, jones_polynomial, markov_invariance_test, BraidWord};
use easygram::verify;
use easygram::{Error, Result};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::output::{cell, float, Ctx, Doc, Table};
use crate::{
    Command, CumAction, CumArgs, Formula, GramAction, GramArgs, GroupName, JonesArgs, LawAction, LawArgs,
    OracleAction, OracleArgs, PartitionsAction, PartitionsArgs, Suite, TableName, WgAction,
};

pub struct Outcome {
    pub doc: Doc,
    /// False when a requested check failed.
    pub verified: bool,
}

impl From<Doc> for Outcome {
    fn from(doc: Doc) -> Self {
        Outcome { doc, verified: true }
    }
}

pub fn run(ctx: &Ctx, command: Command) -> Result<Outcome> {
    match command {
        Command::Partitions { action, args } => partitions(action, &args).map(Into::into),
        Command::Gram { action, args } => gram(action, &args).map(Into::into),
        Command::Wg { action } => wg(ctx, action).map(Into::into),
        Command::Oracle { action, args } => oracle(ctx, action, &args).map(Into::into),
        Command::Law { action, args } => law(ctx, action, &args).map(Into::into),
        Command::Cum { action, args } => cum(ctx, action, &args).map(Into::into),
        Command::Jones(args) => jones(&args),
        Command::Verify { suite } => verify_suite(suite),
        Command::Tables { name } => tables(ctx, name).map(Into::into),
    }
}

fn category(s: &str) -> Result<CategoryId> {
    s.replace('-', "_").parse()
}

fn colored(s: &str) -> Result<ColoredWord> {
    ColoredWord::parse(&s.replace('1', "o").replace('*', "b"))
}

fn word(points: Option<usize>, colors: Option<&str>) -> Result<ColoredWord> {
    match (points, colors) {
        (None, None) => Err(Error::Parse("give --points or --colors".into())),
        (Some(k), None) => Ok(ColoredWord::plain(k)),
        (k, Some(c)) => {
            let w = colored(c)?;
            match k {
                Some(k) if k != w.len() => Err(Error::Shape(format!("{k} points but {} colors", w.len()))),
                _ => Ok(w),
            }
        }
    }
}

fn indices(s: &str) -> Result<Vec<usize>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad index {t:?}"))))
        .collect()
}

fn rationals(s: &str) -> Result<Vec<Rational>> {
    s.split(',').filter(|t| !t.trim().is_empty()).map(parse_rational).collect()
}

fn partitions(action: PartitionsAction, a: &PartitionsArgs) -> Result<Doc> {
    let cat = category(&a.class)?;
    let w = word(a.points, a.colors.as_deref())?;
    let head = json!({"category": cat.token(), "word": w.to_string()});
    match action {
        PartitionsAction::Count => {
            let counts = cat.block_counts(&w)?;
            let count = match a.blocks {
                Some(b) => counts.get(b).copied().unwrap_or(0),
                None => counts.iter().sum(),
            };
            let mut t = Table::new(&["blocks", "count"]);
            for (b, c) in counts.iter().enumerate().filter(|(_, &c)| c > 0) {
                t.push(vec![json!(b), json!(c)]);
            }
            let mut payload = head;
            payload["count"] = json!(count);
            payload["by_blocks"] = json!(counts);
            Ok(Doc::new("partitions count", payload, t))
        }
        PartitionsAction::List => {
            let mut members = cat.members(&w)?;
            if let Some(b) = a.blocks {
                members.retain(|p| p.num_blocks() == b);
            }
            let mut t = Table::new(&["index", "partition", "blocks"]);
            for (i, p) in members.iter().enumerate() {
                t.push(vec![json!(i), json!(p.to_string()), json!(p.num_blocks())]);
            }
            let mut payload = head;
            payload["count"] = json!(members.len());
            payload["partitions"] = members.iter().map(Partition::to_json).collect();
            Ok(Doc::new("partitions list", payload, t))
        }
    }
}

fn matrix_table(members: &[Partition], rows: &[Vec<String>]) -> Table {
    let mut headers = vec!["partition".to_string()];
    headers.extend((0..members.len()).map(|j| j.to_string()));
    let mut t = Table { headers, rows: Vec::new() };
    for (p, r) in members.iter().zip(rows) {
        let mut row = vec![p.to_string()];
        row.extend(r.iter().cloned());
        t.rows.push(row);
    }
    t
}

/// The closed determinant formula that applies to a category.
fn closed_formula(cat: CategoryId, k: usize) -> Option<Factored> {
    match cat {
        CategoryId::P | CategoryId::PEven => lindstrom_det(cat, k).ok(),
        CategoryId::P2 => on_det(k).ok(),
        CategoryId::P12 => bn_det(k).ok(),
        CategoryId::NC2 | CategoryId::NC | CategoryId::NC12 | CategoryId::NCEven => difrancesco_det(cat, k).ok(),
        _ => None,
    }
}

fn named_formula(f: Formula, cat: CategoryId, k: usize) -> Result<Factored> {
    let wrong = || Error::Domain(format!("formula {f:?} does not apply to {cat}"));
    match f {
        Formula::Direct => Err(wrong()),
        Formula::Lindstrom => lindstrom_det(cat, k),
        Formula::YoungOn if cat == CategoryId::P2 => on_det(k),
        Formula::YoungBn if cat == CategoryId::P12 => bn_det(k),
        Formula::Difrancesco => difrancesco_det(cat, k),
        _ => Err(wrong()),
    }
}

/// Seed exponent over the noncrossing index set and over all partitions.
fn a_k_conventions(cat: CategoryId, k: usize) -> Result<Option<Value>> {
    let (nc, all) = match cat {
        CategoryId::NC => (ClassFilter::Noncrossing, ClassFilter::All),
        CategoryId::NCEven if k % 2 == 0 => (ClassFilter::NoncrossingEven, ClassFilter::EvenBlocks),
        _ => return Ok(None),
    };
    Ok(Some(json!({"noncrossing": a_exponent(nc, k)?, "all_partitions": a_exponent(all, k)?, "used": "noncrossing"})))
}

fn factored_json(f: &Factored) -> Value {
    json!({"display": f.to_string(), "factors": f.to_json()})
}

fn gram(action: GramAction, a: &GramArgs) -> Result<Doc> {
    let cat = category(&a.category)?;
    let w = word(Some(a.k), a.colors.as_deref())?;
    let need_n = || a.n.ok_or_else(|| Error::Parse("--n is required unless --symbolic is given".into()));
    let mut payload = json!({"category": cat.token(), "word": w.to_string()});
    if let Some(n) = a.n {
        payload["n"] = json!(n);
    }
    match action {
        GramAction::Matrix => {
            let (members, rows): (Vec<Partition>, Vec<Vec<String>>) = if a.symbolic {
                let g = gram_matrix_symbolic(cat, &w)?;
                let rows = g.matrix.to_rows().iter().map(|r| r.iter().map(|p| p.display("N").to_string()).collect()).collect();
                (g.members, rows)
            } else {
                let g = gram_matrix(cat, &w, need_n()?)?;
                let rows = g.matrix.to_rows().iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect();
                (g.members, rows)
            };
            payload["index"] = members.iter().map(Partition::to_json).collect();
            payload["matrix"] = json!(rows);
            let t = matrix_table(&members, &rows);
            Ok(Doc::new("gram matrix", payload, t))
        }
        GramAction::Det => {
            payload["formula"] = json!(format!("{:?}", a.formula).to_lowercase());
            if a.formula == Formula::Direct {
                if a.symbolic {
                    payload["polynomial"] = json!(gram_det_symbolic(cat, &w)?.display("N").to_string());
                }
                if let Some(n) = a.n {
                    let v = gram_det_direct(cat, &w, n)?;
                    payload["value"] = json!(v.to_string());
                    if w.is_plain() {
                        if let Some(f) = closed_formula(cat, a.k) {
                            payload["factored"] = factored_json(&f);
                            payload["factored_agrees"] = json!(f.eval(&BigInt::from(n)) == v);
                        }
                    }
                } else if !a.symbolic {
                    need_n()?;
                }
            } else {
                if !w.is_plain() {
                    return Err(Error::Domain("closed formulas take uncolored points".into()));
                }
                let f = named_formula(a.formula, cat, a.k)?;
                payload["factored"] = factored_json(&f);
                if a.formula == Formula::Difrancesco {
                    if let Some(v) = a_k_conventions(cat, a.k)? {
                        payload["a_k"] = v;
                    }
                }
                if a.symbolic {
                    payload["polynomial"] = json!(f.expand()?.display("N").to_string());
                }
                match a.n {
                    Some(n) => payload["value"] = json!(f.eval(&BigInt::from(n)).to_string()),
                    None if !a.symbolic => {
                        need_n()?;
                    }
                    None => {}
                }
            }
            Ok(Doc::fields("gram det", payload))
        }
        GramAction::Rank => {
            let n = need_n()?;
            payload["rank"] = json!(gram_rank(cat, &w, n)?);
            payload["size"] = json!(cat.members(&w)?.len());
            Ok(Doc::fields("gram rank", payload))
        }
    }
}

fn wg(ctx: &Ctx, action: WgAction) -> Result<Doc> {
    match action {
        WgAction::Matrix { category: c, k, colors, n } => {
            let cat = category(&c)?;
            let w = word(Some(k), colors.as_deref())?;
            let m = weingarten_matrix(cat, &w, n)?;
            let rows: Vec<Vec<Value>> = m.matrix.to_rows().iter().map(|r| r.iter().map(|q| ctx.rat(q)).collect()).collect();
            let cells: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(cell).collect()).collect();
            let payload = json!({
                "category": cat.token(),
                "word": w.to_string(),
                "n": n,
                "index": m.members.iter().map(Partition::to_json).collect::<Vec<_>>(),
                "matrix": rows,
            });
            Ok(Doc::new("wg matrix", payload, matrix_table(&m.members, &cells)))
        }
        WgAction::Integrate { category: c, n, exponents, rows, cols } => {
            let cat = category(&c)?;
            let w = colored(&exponents)?;
            let (i, j) = (indices(&rows)?, indices(&cols)?);
            let v = integrate_monomial(cat, n, &w, &i, &j)?;
            let payload = json!({
                "category": cat.token(), "n": n, "exponents": w.to_string(),
                "rows": i, "cols": j, "value": ctx.rat(&v),
            });
            Ok(Doc::fields("wg integrate", payload))
        }
        WgAction::CharMoment { category: c, n, k, colors, s, asymptotic, t } => {
            let cat = category(&c)?;
            let w = word(Some(k), colors.as_deref())?;
            let v = truncated_moment(cat, n, &w, s)?;
            let mut payload = json!({"category": cat.token(), "n": n, "word": w.to_string(), "s": s, "moment": ctx.rat(&v)});
            if asymptotic {
                let t = parse_rational(t.as_deref().unwrap_or("1"))?;
                let p = asymptotic_moment_poly(cat, &w)?;
                payload["t"] = json!(fmt_rational(&t));
                payload["asymptotic"] = ctx.rat(&p.eval(&t));
                payload["asymptotic_polynomial"] = json!(poly_to_string(&p));
            }
            Ok(Doc::fields("wg char-moment", payload))
        }
    }
}

fn group(name: GroupName, n: usize, s: Option<u32>) -> Result<GroupSpec> {
    Ok(match name {
        GroupName::Zn => GroupSpec::Cyclic(n),
        GroupName::Dn => GroupSpec::Dihedral(n),
        GroupName::Sn => GroupSpec::Symmetric(n),
        GroupName::An => GroupSpec::Alternating(n),
        GroupName::Hn => GroupSpec::Hyperoctahedral(n),
        GroupName::Hns => {
            GroupSpec::ComplexReflection(n, s.ok_or_else(|| Error::Parse("hns needs --s".into()))?)
        }
    })
}

fn atom_string<R: easygram::algebra::Ring + std::fmt::Display>(a: &Cyclotomic<R>) -> String {
    match a.as_scalar() {
        Some(v) => v.to_string(),
        None => a.to_string(),
    }
}

fn law_doc(ctx: &Ctx, command: &str, mut head: Value, law: &DiscreteLaw, closed: Option<DiscreteLaw>) -> Result<Outcome> {
    let mut t = Table::new(&["atom", "probability"]);
    let atoms: Vec<Value> = law
        .atoms
        .iter()
        .map(|(a, p)| {
            t.push(vec![json!(atom_string(a)), ctx.rat(p)]);
            json!({"atom": atom_string(a), "prob": ctx.rat(p)})
        })
        .collect();
    head["atoms"] = json!(atoms);
    let mut verified = true;
    if let Some(c) = closed {
        verified = c == *law;
        head["closed_form_agrees"] = json!(verified);
    }
    Ok(Outcome { doc: Doc::new(command, head, t), verified })
}

fn oracle(ctx: &Ctx, action: OracleAction, a: &OracleArgs) -> Result<Outcome> {
    let phase = if matches!(action, OracleAction::TruncLaw) { None } else { a.s };
    let g = group(a.group, a.n, phase)?;
    let head = json!({"group": g.to_string(), "order": g.order()?});
    match action {
        OracleAction::Elements => {
            let mut t = Table::new(&["index", "perm", "phases"]);
            let mut list = Vec::new();
            g.for_each_element(|x| {
                let perm: Vec<usize> = x.perm.iter().map(|p| p + 1).collect();
                let join = |v: &[usize]| v.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ");
                let phases: Vec<usize> = x.phases.iter().map(|&p| p as usize).collect();
                t.push(vec![json!(list.len()), json!(join(&perm)), json!(join(&phases))]);
                list.push(json!({"perm": perm, "phases": phases}));
            })?;
            let mut payload = head;
            payload["elements"] = json!(list);
            Ok(Doc::new("oracle elements", payload, t).into())
        }
        OracleAction::Law => {
            let closed = match g {
                GroupSpec::Cyclic(n) => Some(cyclic_character_closed(n)),
                GroupSpec::Dihedral(n) => Some(dihedral_character_closed(n)),
                GroupSpec::Symmetric(n) => Some(symmetric_character_closed(n)),
                _ => None,
            };
            law_doc(ctx, "oracle law", head, &character_law(g)?, closed)
        }
        OracleAction::TruncLaw => {
            if !matches!(g, GroupSpec::Symmetric(_)) {
                return Err(Error::Domain("truncated laws are computed over sn".into()));
            }
            let s = a.s.ok_or_else(|| Error::Parse("trunc-law needs --s".into()))? as usize;
            let mut head = head;
            head["s"] = json!(s);
            let law = truncated_character_law(a.n, s)?;
            law_doc(ctx, "oracle trunc-law", head, &law, Some(truncated_character_closed(a.n, s)?))
        }
        OracleAction::Integrate => {
            let need = |v: &Option<String>, f: &str| v.clone().ok_or_else(|| Error::Parse(format!("integrate needs --{f}")));
            let w = colored(&need(&a.exponents, "exponents")?)?;
            let (i, j) = (indices(&need(&a.rows, "rows")?)?, indices(&need(&a.cols, "cols")?)?);
            let v = integrate_exact(g, &w, &i, &j)?;
            let mut payload = head;
            payload["exponents"] = json!(w.to_string());
            payload["rows"] = json!(i);
            payload["cols"] = json!(j);
            payload["value"] = match v.as_scalar() {
                Some(q) => ctx.rat(&q),
                None => json!(v.to_string()),
            };
            Ok(Doc::fields("oracle integrate", payload).into())
        }
        OracleAction::Fixdim => {
            let w = word(a.k, a.colors.as_deref())?;
            let mut payload = head;
            payload["word"] = json!(w.to_string());
            payload["fix_dim"] = json!(fix_dim(g, &w)?);
            Ok(Doc::fields("oracle fixdim", payload).into())
        }
    }
}

fn grid(spec: &str) -> Result<Vec<f64>> {
    let parts: Vec<f64> = spec
        .split(':')
        .map(|p| p.trim().parse().map_err(|_| Error::Parse(format!("bad grid {spec:?}, expected A:B:STEP"))))
        .collect::<Result<_>>()?;
    match parts[..] {
        [a, b, step] => DensityGrid::stepped(a, b, step),
        _ => Err(Error::Parse(format!("bad grid {spec:?}, expected A:B:STEP"))),
    }
}

fn default_grid(law: &LawSpec) -> Result<Vec<f64>> {
    match support(law)? {
        Some((a, b)) if b > a => DensityGrid::linspace(a, b, 101),
        Some((a, _)) => Ok(vec![a]),
        None => {
            let r = 4.0 * law.parameter().map_or(1.0, rational_to_f64).sqrt();
            DensityGrid::linspace(-r, r, 101)
        }
    }
}

/// Parameters `(s, t)` of the laws given by a mass function on the integers.
fn lattice_law(law: &LawSpec) -> Option<(u32, f64)> {
    match law {
        LawSpec::Poisson(t) => Some((1, rational_to_f64(t))),
        LawSpec::BesselReal(t) => Some((2, rational_to_f64(t))),
        LawSpec::Bessel { s, t } => Some((*s, rational_to_f64(t))),
        _ => None,
    }
}

fn law(ctx: &Ctx, action: LawAction, a: &LawArgs) -> Result<Doc> {
    let spec = LawSpec::parse(&a.law, parse_rational(&a.t)?, a.s)?;
    let mut payload = json!({"law": spec.to_string()});
    match action {
        LawAction::Moments => {
            let order = a.order.unwrap_or(8);
            let m = if order <= easygram::prob_laws::MAX_WORD { moments(&spec, order)? } else { long_moments(&spec, order)? };
            let mut t = Table::new(&["k", "moment"]);
            for (k, v) in m.iter().enumerate() {
                t.push(vec![json!(k + 1), ctx.rat(v)]);
            }
            payload["moments"] = ctx.rats(&m);
            if spec.category().is_some() && order <= easygram::prob_laws::MAX_WORD {
                if let Ok(p) = moment_polys(&spec, order) {
                    payload["polynomials_in_t"] = p.iter().map(|q| json!(poly_to_string(q))).collect();
                }
            }
            Ok(Doc::new("law moments", payload, t))
        }
        LawAction::Density => {
            if let Some((s, tv)) = lattice_law(&spec) {
                let xs = match &a.grid {
                    Some(g) => grid(g)?,
                    None => (0..=20).map(|k| k as f64).collect(),
                };
                let lo = if s == 1 { 0 } else { xs.first().map_or(0, |x| x.ceil() as i64) };
                let hi = xs.last().map_or(0, |x| x.floor() as i64);
                let mut t = Table::new(&["k", "mass"]);
                let mut masses = Vec::new();
                for k in lo.max(xs.first().map_or(0, |x| x.ceil() as i64))..=hi {
                    let m = bessel_pmf(s, tv, k)?;
                    t.push(vec![json!(k), float(m)]);
                    masses.push(json!({"k": k, "mass": float(m)}));
                }
                payload["masses"] = json!(masses);
                return Ok(Doc::new("law density", payload, t));
            }
            let xs = match &a.grid {
                Some(g) => grid(g)?,
                None => default_grid(&spec)?,
            };
            let d = DensityGrid::closed_form(&spec, xs)?;
            let mut t = Table::new(&["x", "density"]);
            let mut points = Vec::new();
            for (x, v) in d.rows() {
                t.push(vec![float(x), float(v)]);
                points.push(json!({"x": float(x), "density": float(v)}));
            }
            payload["points"] = json!(points);
            payload["atoms"] = d.atoms_json();
            Ok(Doc::new("law density", payload, t))
        }
        LawAction::Invert => {
            let order = a.order.unwrap_or(60);
            let eps = a.eps.unwrap_or(1e-3);
            let m = long_moments(&spec, order)?;
            let xs = match &a.grid {
                Some(g) => grid(g)?,
                None => default_grid(&spec)?,
            };
            let inv = Inverter::new(&m);
            let mut t = Table::new(&["x", "estimate", "closed_form"]);
            let mut points = Vec::new();
            let mut worst: Option<f64> = Some(0.0);
            for x in xs {
                let e = inv.density(x, eps)?;
                let exact = density(&spec, x).ok();
                worst = match (worst, exact) {
                    (Some(w), Some(c)) => Some(w.max((e - c).abs())),
                    _ => None,
                };
                let exact_v = exact.map_or(Value::Null, float);
                t.push(vec![float(x), float(e), exact_v.clone()]);
                points.push(json!({"x": float(x), "estimate": float(e), "closed_form": exact_v}));
            }
            payload["moments_used"] = json!(order);
            payload["eps"] = float(eps);
            payload["max_deviation"] = worst.map_or(Value::Null, float);
            payload["points"] = json!(points);
            Ok(Doc::new("law invert", payload, t))
        }
    }
}

fn cum(ctx: &Ctx, action: CumAction, a: &CumArgs) -> Result<Doc> {
    let input = rationals(&a.moments)?;
    let n = a.order.unwrap_or(input.len());
    let seq_doc = |name: &str, out: Vec<Rational>, payload: &mut Value| {
        let mut t = Table::new(&["n", name]);
        for (i, v) in out.iter().enumerate() {
            t.push(vec![json!(i + 1), ctx.rat(v)]);
        }
        payload[name] = ctx.rats(&out);
        t
    };
    let mut payload = json!({"order": n, "input": ctx.rats(&input)});
    let (command, table) = match (action, a.inverse) {
        (CumAction::Classical, false) => ("cum classical", seq_doc("cumulants", moments_to_cumulants_classical(&input, n)?, &mut payload)),
        (CumAction::Classical, true) => ("cum classical", seq_doc("moments", cumulants_to_moments_classical(&input, n)?, &mut payload)),
        (CumAction::Free, false) => ("cum free", seq_doc("cumulants", moments_to_cumulants_free(&input, n)?, &mut payload)),
        (CumAction::Free, true) => ("cum free", seq_doc("moments", cumulants_to_moments_free(&input, n)?, &mut payload)),
        (CumAction::Bp, inverse) => {
            let out = if inverse { easygram::cumulants::bp_inverse(&input, n)? } else { bp_map(&input, n)? };
            ("cum bp", seq_doc("moments", out, &mut payload))
        }
        (CumAction::Rseries, _) => {
            let r = r_series(&input, n)?;
            let g = cauchy_series(&input, n)?;
            payload["cauchy_series"] = ctx.rats(g.coeffs());
            payload["inversion_holds"] = json!(check_inversion(&input, n)?);
            ("cum rseries", seq_doc("r_series", r.coeffs().to_vec(), &mut payload))
        }
    };
    Ok(Doc::new(command, payload, table))
}

fn jones(a: &JonesArgs) -> Result<Outcome> {
    let w = BraidWord::parse(a.strands, &a.braid)?;
    let mut payload = json!({"strands": w.strands(), "braid": w.to_string(), "writhe": w.writhe()});
    if a.bracket_only {
        payload["bracket"] = json!(bracket(&w)?.display("A", 1).to_string());
        return Ok(Doc::fields("jones", payload).into());
    }
    let v = jones_polynomial(&w)?;
    payload["jones"] = v.to_json();
    payload["display"] = json!(v.to_string());
    let mut verified = true;
    if let Some(trials) = a.check_markov {
        let r = markov_invariance_test(&w, trials, a.seed, 3)?;
        verified = r.passed();
        payload["markov"] = json!({
            "trials": r.trials, "moves": r.moves, "seed": a.seed, "passed": verified, "failure": r.failure,
        });
    }
    let mut t = Table::new(&["exponent", "coefficient"]);
    if let Value::Object(m) = &payload["jones"] {
        for (k, c) in m {
            t.push(vec![json!(k.trim_start_matches("q^")), c.clone()]);
        }
    }
    Ok(Outcome { doc: Doc::new("jones", payload, t), verified })
}

fn verify_suite(suite: Suite) -> Result<Outcome> {
    let name = format!("{suite:?}").to_lowercase();
    let ids = verify::suite_criteria(&name)?;
    let results: Vec<verify::CriterionResult> = ids
        .par_iter()
        .map(|&id| {
            let r = verify::run(id);
            eprintln!("{}", r.line());
            r
        })
        .collect();
    let passed = results.iter().all(|r| r.passed);
    let mut t = Table::new(&["criterion", "passed", "title", "detail"]);
    for r in &results {
        t.push(vec![json!(r.id), json!(r.passed), json!(r.title), json!(r.detail)]);
    }
    let payload = json!({
        "suite": name,
        "passed": passed,
        "criteria": results.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
    });
    Ok(Outcome { doc: Doc::new("verify", payload, t), verified: passed })
}

fn tables(ctx: &Ctx, name: TableName) -> Result<Doc> {
    match name {
        TableName::Determinants => {
            let mut t = Table::new(&["category", "k", "determinant"]);
            let mut rows = Vec::new();
            let families: [(CategoryId, &[usize]); 6] = [
                (CategoryId::P, &[1, 2, 3, 4, 5]),
                (CategoryId::P2, &[2, 4, 6, 8]),
                (CategoryId::P12, &[1, 2, 3, 4, 5]),
                (CategoryId::NC, &[1, 2, 3, 4, 5, 6]),
                (CategoryId::NC2, &[2, 4, 6, 8, 10]),
                (CategoryId::NC12, &[1, 2, 3, 4, 5, 6]),
            ];
            for (cat, ks) in families {
                for &k in ks {
                    if let Some(f) = closed_formula(cat, k) {
                        t.push(vec![json!(cat.token()), json!(k), json!(f.to_string())]);
                        rows.push(json!({"category": cat.token(), "k": k, "determinant": factored_json(&f)}));
                    }
                }
            }
            Ok(Doc::new("tables determinants", json!({"determinants": rows}), t))
        }
        TableName::Characters => {
            let mut t = Table::new(&["group", "atom", "probability"]);
            let mut rows = Vec::new();
            for n in 1..=6 {
                let g = GroupSpec::Symmetric(n);
                let law = character_law(g)?;
                let atoms: Vec<Value> = law
                    .atoms
                    .iter()
                    .map(|(a, p)| {
                        t.push(vec![json!(g.to_string()), json!(atom_string(a)), ctx.rat(p)]);
                        json!({"atom": atom_string(a), "prob": ctx.rat(p)})
                    })
                    .collect();
                rows.push(json!({"group": g.to_string(), "atoms": atoms}));
            }
            Ok(Doc::new("tables characters", json!({"laws": rows}), t))
        }
        TableName::Cumulants => {
            let laws = [
                ("poisson", false),
                ("bessel-real", false),
                ("gaussian", false),
                ("semicircle", true),
                ("mp", true),
            ];
            let mut t = Table::new(&["law", "moments", "cumulants"]);
            let mut rows = Vec::new();
            for (name, free) in laws {
                let spec = LawSpec::parse(name, Rational::from_integer(BigInt::from(1)), None)?;
                let m = moments(&spec, 8)?;
                let k = if free { moments_to_cumulants_free(&m, 8)? } else { moments_to_cumulants_classical(&m, 8)? };
                let join = |v: &[Rational]| v.iter().map(fmt_rational).collect::<Vec<_>>().join(" ");
                t.push(vec![json!(name), json!(join(&m)), json!(join(&k))]);
                rows.push(json!({"law": name, "free": free, "moments": ctx.rats(&m), "cumulants": ctx.rats(&k)}));
            }
            Ok(Doc::new("tables cumulants", json!({"laws": rows}), t))
        }
        TableName::Jones => {
            let links = [
                ("unknot", 1, ""),
                ("unlink", 2, ""),
                ("trefoil", 2, "1 1 1"),
                ("hopf", 2, "1 1"),
                ("figure-eight", 3, "1 -2 1 -2"),
            ];
            let mut t = Table::new(&["link", "strands", "braid", "jones"]);
            let mut rows = Vec::new();
            for (name, k, b) in links {
                let v = jones_polynomial(&BraidWord::parse(k, b)?)?;
                t.push(vec![json!(name), json!(k), json!(b), json!(v.to_string())]);
                rows.push(json!({"link": name, "strands": k, "braid": b, "jones": v.to_json()}));
            }
            Ok(Doc::new("tables jones", json!({"links": rows}), t))
        }
    }
}
