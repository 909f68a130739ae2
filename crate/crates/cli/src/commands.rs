//! Command handlers. Each returns a JSON payload and a status; rendering and
//! exit codes are applied by the caller.

use crate::args::*;
use crate::caps::Caps;
use crate::{audit, Outcome};
use anyhow::{anyhow, bail, Context, Result};
use hookline::asai::{asai_verify, AsaiConfig};
use hookline::degrees::{
    count_degree_at_most, labels_of_kind, type_a_labels, unip_degree_a, unip_degree_bcd, CountKind, DegreeType,
};
use hookline::flags::{
    flag_bounds, flag_count, level_char_value, stable_flag_count, stable_flag_epsilon, EigStructure, FlagType,
    StableRoute,
};
use hookline::formal::render_rational;
use hookline::mn::{Evaluator, PhiRoute};
use hookline::signed::{centralizer_order, class_list};
use hookline::weyl::{audit_bounds, audit_type_d, phi_cross_route, rho_table, BoundMode};
use hookline::young::{inverse_kostka_row, kostka};
use hookline::{operators, Array, BetaSet, Partition, SignedCycleType, Symbol};
use hookline_groups::classical::{build_group, Family, MatrixGroup};
use hookline_groups::cyclo::RootSum;
use hookline_groups::dixon::{character_table, CharacterTable};
use hookline_groups::matrix::{parse_matrix_file, Matrix};
use hookline_groups::products::{frobenius_count, frobenius_vs_convolution, thompson_coverage, CONVOLUTION_LIMIT};
use hookline_groups::support::{coxeter_torus_generator, regular_semisimple, support};
use hookline_groups::Field;
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};

pub fn run(cli: &Cli) -> Result<Outcome> {
    if let Some(t) = cli.global.threads {
        // the global pool can only be configured once per process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    match &cli.command {
        Command::Symbol(c) => symbol(c),
        Command::Asai(AsaiCmd::Verify { max_entry, max_union, max_rank, d_max }) => {
            let cfg = AsaiConfig { max_entry: *max_entry, max_union: *max_union, max_rank: *max_rank, d_max: *d_max };
            let r = asai_verify(&cfg);
            Outcome::checked(
                r.ok(),
                json!({
                    "checked": r.checked,
                    "arrays": r.arrays,
                    "failures": r.failures,
                    "flipped_sign_witness": r.flipped_sign_witness,
                }),
            )
        }
        Command::Weyl(c) => weyl(c),
        Command::Degree(c) => degree(c),
        Command::Young(c) => young(c),
        Command::Flags(FlagsCmd::Count(a)) => flags_count(a),
        Command::Flags(FlagsCmd::Stable(a)) => flags_stable(a),
        Command::Group(c) => group(c, cli.global.seed),
        Command::Audit(AuditCmd::All) => {
            let caps = Caps::load(cli.global.caps.as_deref())?;
            let report = audit::run_all(&caps);
            Outcome::checked(report.passed(), report)
        }
        Command::Audit(AuditCmd::Table { file }) => {
            let text = std::fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
            let table: CharacterTable = serde_json::from_str(&text).context("parsing character table")?;
            let v = table.validate();
            Outcome::checked(v.ok(), json!({ "order": table.order, "validation": v }))
        }
    }
}

fn parse_array(s: &str) -> Result<Array> {
    Ok(Array::parse(s)?)
}

fn parse_list(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<u32>().with_context(|| format!("bad entry {t:?}")))
        .collect()
}

/// An integer that may exceed u64, as a JSON number when it fits.
fn big_json(v: u128) -> Value {
    u64::try_from(v).map_or_else(|_| json!(v.to_string()), |x| json!(x))
}

fn symbol(c: &SymbolCmd) -> Result<Outcome> {
    match c {
        SymbolCmd::Rank { array } => {
            let x = parse_array(array)?;
            Outcome::ok(json!({ "rank": x.rank()?, "defect": x.defect() }))
        }
        SymbolCmd::Defect { array } => Outcome::ok(json!({ "defect": parse_array(array)?.defect() })),
        SymbolCmd::Sim { array } => {
            let x = parse_array(array)?;
            let members: Vec<String> = x.similarity_class().iter().map(|y| y.to_string()).collect();
            Outcome::ok(json!({
                "array": x.to_string(),
                "size": members.len(),
                "special": x.special().to_string(),
                "members": members,
            }))
        }
        SymbolCmd::Fourier { array, parity } => {
            let x = parse_array(array)?;
            if parity.is_some_and(|e| e > 1) {
                bail!("parity must be 0 or 1");
            }
            let terms: Vec<Value> = operators::fourier_array(&x, *parity)
                .iter()
                .map(|(y, c)| json!({ "array": y.to_string(), "coefficient": render_rational(c) }))
                .collect();
            Outcome::ok(json!({ "array": x.to_string(), "parity": parity, "terms": terms }))
        }
        SymbolCmd::Special { array } => {
            let x = parse_array(array)?;
            Outcome::ok(json!({
                "array": x.to_string(),
                "special": x.special().to_string(),
                "sharp": x.sharp(),
                "s": x.s(),
                "d": x.d(),
            }))
        }
    }
}

fn weyl(c: &WeylCmd) -> Result<Outcome> {
    match c {
        WeylCmd::Classes { n } => {
            let classes: Vec<Value> = class_list(*n)
                .iter()
                .map(|t| json!({ "class": t.to_string(), "centralizer": centralizer_order(t) }))
                .collect();
            Outcome::ok(json!({ "n": n, "count": classes.len(), "classes": classes }))
        }
        WeylCmd::Char { n, defect, csv } => {
            if !(0..=1).contains(defect) {
                bail!("defect must be 0 or 1");
            }
            let t = rho_table(*n, *defect)?;
            if *csv {
                let mut w = csv::Writer::from_writer(Vec::new());
                let mut header = vec!["symbol".to_string()];
                header.extend(t.classes.iter().map(|c| c.to_string()));
                w.write_record(&header)?;
                for (x, row) in t.labels.iter().zip(&t.values) {
                    let mut rec = vec![x.to_string()];
                    rec.extend(row.iter().map(|v| v.to_string()));
                    w.write_record(&rec)?;
                }
                return Outcome::ok(String::from_utf8(w.into_inner()?)?);
            }
            Outcome::ok(json!({
                "n": n,
                "defect": defect,
                "classes": t.classes.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "rows": t.labels.iter().zip(&t.values).map(|(x, r)| json!({ "symbol": x.to_string(), "values": r })).collect::<Vec<_>>(),
            }))
        }
        WeylCmd::Phi { n, symbol, class } => match (symbol, class) {
            (Some(s), Some(t)) => {
                let x = parse_array(s)?;
                let t = SignedCycleType::parse(t)?;
                let mut ev = Evaluator::new();
                let a = ev.phi(&x, &t, PhiRoute::Definition)?;
                let b = ev.phi(&x, &t, PhiRoute::Recursion)?;
                Outcome::checked(
                    a == b,
                    json!({
                        "symbol": x.to_string(),
                        "class": t.to_string(),
                        "definition": render_rational(&a),
                        "recursion": render_rational(&b),
                    }),
                )
            }
            (None, None) => {
                let n = n.ok_or_else(|| anyhow!("give --n, or --symbol with --class"))?;
                let r = phi_cross_route(n)?;
                Outcome::checked(r.mismatches.is_empty(), r)
            }
            _ => bail!("--symbol and --class go together"),
        },
        WeylCmd::Audit { n } => {
            let mut ok = true;
            let mut tables = Vec::new();
            for defect in [0, 1] {
                let o = rho_table(*n, defect)?.orthogonality();
                ok &= o.ok();
                tables.push(json!({ "defect": defect, "orthogonality": o }));
            }
            let phi = phi_cross_route(*n)?;
            let rho_bound = audit_bounds(*n, BoundMode::Rho)?;
            let phi_bound = audit_bounds(*n, BoundMode::Phi)?;
            ok &= phi.mismatches.is_empty() && rho_bound.ok && phi_bound.ok;
            let type_d = if (1..=4).contains(n) {
                let r = audit_type_d(*n)?;
                ok &= r.ok && r.table_valid;
                Some(r)
            } else {
                None
            };
            Outcome::checked(
                ok,
                json!({
                    "n": n,
                    "tables": tables,
                    "phi_routes": { "checked": phi.checked, "mismatches": phi.mismatches },
                    "rho_bound": rho_bound,
                    "phi_bound": phi_bound,
                    "type_d_bound": type_d,
                }),
            )
        }
    }
}

fn degree(c: &DegreeCmd) -> Result<Outcome> {
    match c {
        DegreeCmd::Eval { kind, q, symbol, lambda } => {
            let kind: DegreeType = kind.parse()?;
            match kind {
                DegreeType::A | DegreeType::TwistedA => {
                    let lambda = lambda.as_deref().ok_or_else(|| anyhow!("type {kind} needs --lambda"))?;
                    let lambda = Partition::parse(lambda)?;
                    let d = unip_degree_a(&BetaSet::from_partition(&lambda), *q, kind == DegreeType::TwistedA)?;
                    Outcome::ok(json!({ "label": lambda.to_string(), "degree": d.value.to_string(), "q": q, "type": kind.to_string() }))
                }
                _ => {
                    let s = symbol.as_deref().ok_or_else(|| anyhow!("type {kind} needs --symbol"))?;
                    let sym: Symbol = s.parse()?;
                    let fits = match kind {
                        DegreeType::B | DegreeType::C => sym.defect() % 2 == 1,
                        DegreeType::D => sym.defect() % 4 == 0,
                        _ => sym.defect() % 4 == 2,
                    };
                    if !fits {
                        bail!("{sym} has defect {}, which does not label a unipotent character of type {kind}", sym.defect());
                    }
                    let d = unip_degree_bcd(&sym, *q)?;
                    Outcome::ok(json!({
                        "symbol": d.symbol,
                        "degree": d.value.to_string(),
                        "rank": d.rank,
                        "defect": d.defect,
                        "printed": d.printed,
                        "printed_exact": d.printed_exact,
                    }))
                }
            }
        }
        DegreeCmd::Enumerate { kind, rank, q } => {
            let kind: CountKind = kind.parse()?;
            let rows: Vec<Value> = if kind == CountKind::A {
                type_a_labels(*rank)
                    .iter()
                    .map(|b| {
                        let d = unip_degree_a(b, *q, false)?;
                        Ok(json!({ "symbol": b.to_partition().to_string(), "degree": d.value.to_string() }))
                    })
                    .collect::<Result<_>>()?
            } else {
                labels_of_kind(kind, *rank)
                    .iter()
                    .map(|s| {
                        let d = unip_degree_bcd(s, *q)?;
                        Ok(json!({ "symbol": d.symbol, "degree": d.value.to_string() }))
                    })
                    .collect::<Result<_>>()?
            };
            Outcome::ok(rows)
        }
        DegreeCmd::Count { kind, rank, q, max } => {
            let kind: CountKind = kind.parse()?;
            let max: BigInt = max.parse().with_context(|| format!("bad bound {max:?}"))?;
            let r = count_degree_at_most(kind, *rank, *q, &max)?;
            Outcome::checked(r.ok(), r)
        }
    }
}

fn young(c: &YoungCmd) -> Result<Outcome> {
    match c {
        YoungCmd::Kostka { lambda, mu } => {
            Outcome::ok(big_json(kostka(&Partition::parse(lambda)?, &Partition::parse(mu)?)?))
        }
        YoungCmd::Inverse { lambda, cap } => {
            let row = inverse_kostka_row(&Partition::parse(lambda)?, *cap)?;
            let terms: Vec<Value> =
                row.iter().map(|(mu, c)| json!({ "mu": mu.to_string(), "coefficient": c.to_string() })).collect();
            Outcome::ok(terms)
        }
        YoungCmd::Flags(a) => flags_count(a),
        YoungCmd::Stable(a) => flags_stable(a),
        YoungCmd::Lowa { lambda, q, eig } => {
            let k = Field::new(*q)?;
            let lambda = Partition::parse(lambda)?;
            let g = EigStructure::parse(&k, eig, lambda.size() as u32)?;
            let v = level_char_value(&k, &lambda, &g)?;
            Outcome::checked(v.degree_matches, v)
        }
    }
}

fn flags_count(a: &FlagCountArgs) -> Result<Outcome> {
    let t = FlagType::new(parse_list(&a.a)?, a.n)?;
    let count = flag_count(&t, a.q);
    let bounds = (!t.dims().is_empty()).then(|| flag_bounds(&t, a.q)).transpose()?;
    let ok = bounds.as_ref().map_or(true, |b| b.lower && b.upper && b.ratio);
    Outcome::checked(
        ok,
        json!({ "a": t.dims(), "N": a.n, "q": a.q, "dimension": t.dimension(), "count": count.to_string(), "bounds": bounds }),
    )
}

/// N from `--N`, or from the multiplicities of an `e:m,…` description.
fn ambient(eig: &str, n: Option<u32>) -> Result<u32> {
    if let Some(n) = n {
        return Ok(n);
    }
    if !eig.contains(':') {
        bail!("--N is required for block descriptions");
    }
    eig.split(',')
        .map(|item| {
            let m = item.split_once(':').map(|p| p.1).unwrap_or("");
            m.trim().parse::<u32>().with_context(|| format!("bad multiplicity in {item:?}"))
        })
        .sum()
}

fn flags_stable(a: &StableArgs) -> Result<Outcome> {
    let k = Field::new(a.q)?;
    let n = ambient(&a.eig, a.n)?;
    let g = EigStructure::parse(&k, &a.eig, n)?;
    let t = FlagType::new(parse_list(&a.a)?, n)?;
    let report = stable_flag_epsilon(&k, &g, &t)?;
    let brute = a.brute.then(|| stable_flag_count(&k, &g, &t, StableRoute::Brute)).transpose()?;
    let agree = brute.as_ref().map_or(true, |b| b.to_string() == report.stable);
    Outcome::checked(agree, json!({ "report": report, "brute": brute.map(|b| b.to_string()) }))
}

fn group_from(grp: &GroupArgs) -> Result<MatrixGroup> {
    let family: Family = grp.family.parse()?;
    Ok(build_group(family, grp.n, grp.q)?)
}

fn root_sum_json(v: &RootSum) -> Value {
    let (re, im) = v.to_complex();
    let c = v.reduced();
    json!({ "e": c.e, "coordinates": c.coordinate_strings(), "decimal": format!("{re:.6}{im:+.6}i") })
}

fn group(c: &GroupCmd, seed: u64) -> Result<Outcome> {
    match c {
        GroupCmd::Build(grp) => {
            let g = group_from(grp)?;
            let k = g.ops().field();
            let classes: Vec<Value> = g
                .classes()
                .iter()
                .enumerate()
                .map(|(i, cl)| {
                    let m = g.ops().decode(g.rep(i));
                    json!({ "class": i, "size": cl.size, "order": cl.order, "support": support(k, &m), "representative": m.rows() })
                })
                .collect();
            Outcome::ok(json!({ "group": format!("{}_{}({})", grp.family, grp.n, grp.q), "order": g.order(), "class_count": classes.len(), "classes": classes }))
        }
        GroupCmd::Table(grp) => {
            let g = group_from(grp)?;
            let t = character_table(&g)?;
            let v = t.validate();
            let rows: Vec<Value> = t.values.iter().map(|r| Value::Array(r.iter().map(root_sum_json).collect())).collect();
            Outcome::checked(
                v.ok(),
                json!({
                    "group": format!("{}_{}({})", grp.family, grp.n, grp.q),
                    "order": t.order,
                    "exponent": t.exponent,
                    "class_sizes": t.class_sizes,
                    "class_orders": t.class_orders,
                    "degrees": t.degrees,
                    "values": rows,
                    "validation": v,
                }),
            )
        }
        GroupCmd::Support { matrix, conjugates } => {
            let text = std::fs::read_to_string(matrix).with_context(|| format!("reading {}", matrix.display()))?;
            let (k, x) = parse_matrix_file(&text)?;
            let s = support(&k, &x);
            let mut rng = StdRng::seed_from_u64(seed);
            let mut samples = Vec::with_capacity(*conjugates);
            while samples.len() < *conjugates {
                let data: Vec<u8> = (0..x.n() * x.n()).map(|_| rng.gen_range(0..k.q()) as u8).collect();
                let h = Matrix::new(x.n(), data)?;
                if h.det(&k) == 0 {
                    continue;
                }
                let y = h.mul(&k, &x).mul(&k, &h.inverse(&k)?);
                samples.push(support(&k, &y));
            }
            Outcome::checked(
                samples.iter().all(|&v| v == s),
                json!({
                    "support": s,
                    "scalar": x.is_scalar(),
                    "regular_semisimple": regular_semisimple(&k, &x),
                    "conjugate_supports": samples,
                    "seed": seed,
                }),
            )
        }
        GroupCmd::Frobenius { group: grp, classes } => {
            let g = group_from(grp)?;
            let t = character_table(&g)?;
            if let Some(cs) = classes {
                let cs: Vec<usize> = parse_list(cs)?.into_iter().map(|c| c as usize).collect();
                let [a, b, c] = cs[..] else { bail!("--classes takes three class indices") };
                if cs.iter().any(|&i| i >= g.class_count()) {
                    bail!("class index out of range (the group has {} classes)", g.class_count());
                }
                let f = frobenius_count(&t, a, b, c)?;
                let conv = g.convolution_count(a, b, c);
                return Outcome::checked(
                    f == num_rational::BigRational::from_integer(conv.into()),
                    json!({ "classes": [a, b, c], "frobenius": render_rational(&f), "convolution": conv }),
                );
            }
            let r = frobenius_vs_convolution(&g, &t)?;
            Outcome::checked(r.mismatches.is_empty(), r)
        }
        GroupCmd::Thompson { group: grp, torus, class } => {
            let g = group_from(grp)?;
            let rep = match (torus, class) {
                (true, None) => {
                    let t = coxeter_torus_generator(grp.n as u32, grp.q)?;
                    t.t.pack()
                }
                (false, Some(c)) if *c < g.class_count() => g.rep(*c),
                (false, Some(c)) => bail!("class {c} out of range (the group has {} classes)", g.class_count()),
                _ => bail!("give exactly one of --torus and --class"),
            };
            let t = character_table(&g)?;
            let r = thompson_coverage(&g, &t, rep)?;
            // coverage itself is recorded, not asserted; only a convolution disagreement fails
            Outcome::checked(r.cross_validated || g.order() > CONVOLUTION_LIMIT, r)
        }
        GroupCmd::Cancel { p, q } => {
            let r = hookline_groups::parabolic::cancel_verify(*p, *q)?;
            Outcome::checked(r.ok(), r)
        }
    }
}
