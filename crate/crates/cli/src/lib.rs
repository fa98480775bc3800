//! Subcommands of the `macaulay` tool, each producing a [`Report`].

mod report;

use num_bigint::BigUint;
use serde_json::json;

use macaulay_core::binom::{macaulay_rep, shift_apply, splitting_identity_scan, Shift};
use macaulay_core::hermitian::{
    find_min_sos_exponent, q_upper_bound_alt_shift, rank_interval_closed_form, verify_rank_interval, verify_sos_bounds,
    HermitianBiform, SignedNorm,
};
use macaulay_core::io::{ideals_to_json, IdealDoc};
use macaulay_core::oracle::{exhaustive_monomial_corpus, lex_sharpness_report, random_corpus, CorpusSpec};
use macaulay_core::poly::{equivalence_bridge_check, hilbert_function_with, verify_macaulay_with, RankMode};
use macaulay_core::{Ideal, Result};

pub use report::{Report, Verdict};

pub fn cmd_macrep(a: &BigUint, n: u32) -> Report {
    let rep = macaulay_rep(a, n);
    let mut r = Report::new("macrep");
    r.input("a", a.to_string()).input("n", n);
    let terms: Vec<_> = rep
        .terms
        .iter()
        .map(|t| json!([t.upper.to_string(), t.lower]))
        .collect();
    r.output("terms", terms)
        .output("expansion", rep.to_string())
        .output("value", rep.value().to_string());
    r.verdict("round_trip", rep.value() == *a && rep.is_well_formed());
    r
}

pub fn cmd_shift(a: &BigUint, n: u32, s: i64, t: i64) -> Report {
    let mut r = Report::new("shift");
    r.input("a", a.to_string()).input("n", n).input("s", s).input("t", t);
    r.output("representation", macaulay_rep(a, n).to_string());
    r.output("value", shift_apply(a, n, Shift::new(s, t)).to_string());
    r
}

pub fn cmd_lemma_scan(m_max: u32, d_max: u32, s_max: u32) -> Report {
    let scan = splitting_identity_scan(m_max, d_max, s_max);
    let mut r = Report::new("lemma-scan");
    r.input("m_max", m_max).input("d_max", d_max).input("s_max", s_max);
    r.output("checked", scan.checked).output("failures", &scan.failures);
    r.verdict("splitting_identity", scan.all_ok());
    r
}

pub fn cmd_bridge(n_max: usize, d_max: u32) -> Report {
    let mut r = Report::new("bridge");
    r.input("n_max", n_max).input("d_max", d_max);
    let cases: Vec<(usize, u32)> = (2..=n_max).flat_map(|n| (1..=d_max).map(move |d| (n, d))).collect();
    let failures: Vec<_> = cases
        .iter()
        .filter(|&&(n, d)| !equivalence_bridge_check(n, d))
        .collect();
    r.output("checked", cases.len()).output("failures", &failures);
    if cases.is_empty() {
        r.not_applicable("bound_equivalence");
    } else {
        r.verdict("bound_equivalence", failures.is_empty());
    }
    r
}

pub fn cmd_hilbert(ideals: &[Ideal], d_max: u32, mode: RankMode) -> Report {
    let mut r = Report::new("hilbert");
    r.input("ideals", ideals.iter().map(IdealDoc::from_ideal).collect::<Vec<_>>())
        .input("d_max", d_max)
        .input("mode", mode);
    let values: Vec<_> = ideals
        .iter()
        .map(|ideal| {
            let records = hilbert_function_with(ideal, d_max, mode);
            json!({
                "h_ideal": records.iter().map(|x| x.h_ideal).collect::<Vec<_>>(),
                "h_quotient": records.iter().map(|x| x.h_quotient).collect::<Vec<_>>(),
            })
        })
        .collect();
    r.output("hilbert", values);
    r
}

const MACAULAY_VERDICTS: [&str; 3] = ["ideal_growth_bound", "quotient_growth_bound", "reverse_ideal_bound"];

fn macaulay_section(r: &mut Report, ideals: &[Ideal], d_max: u32, mode: RankMode) -> Result<()> {
    let mut per_ideal = Vec::with_capacity(ideals.len());
    let mut ok = [true; 3];
    let mut applicable = false;
    for ideal in ideals {
        if ideal.n_vars() < 2 || d_max < 1 {
            per_ideal.push(json!(null));
            continue;
        }
        applicable = true;
        let checks = verify_macaulay_with(ideal, d_max, mode)?;
        ok[0] &= checks.iter().all(|c| c.forward_ok);
        ok[1] &= checks.iter().all(|c| c.quotient_ok);
        ok[2] &= checks.iter().all(|c| c.reverse_ok);
        per_ideal.push(serde_json::to_value(&checks).expect("serializable"));
    }
    r.output("checks", per_ideal);
    for (key, ok) in MACAULAY_VERDICTS.iter().zip(ok) {
        if applicable {
            r.verdict(key, ok);
        } else {
            r.not_applicable(key);
        }
    }
    Ok(())
}

pub fn cmd_verify(ideals: &[Ideal], d_max: u32, mode: RankMode) -> Result<Report> {
    let mut r = Report::new("verify");
    r.input("ideals", ideals.iter().map(IdealDoc::from_ideal).collect::<Vec<_>>())
        .input("d_max", d_max)
        .input("mode", mode);
    macaulay_section(&mut r, ideals, d_max, mode)?;
    Ok(r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusKind {
    Random,
    Exhaustive,
}

/// Builds a corpus, runs the Macaulay checks on it and returns the corpus
/// document alongside the report so it can be saved and fed to `verify`.
pub fn cmd_corpus(kind: CorpusKind, spec: &CorpusSpec, mode: RankMode, lex_probe: bool) -> Result<(Report, String)> {
    let ideals = match kind {
        CorpusKind::Random => random_corpus(spec)?,
        CorpusKind::Exhaustive => exhaustive_monomial_corpus(spec.n_vars.1, spec.generators.1, spec.degrees.1),
    };
    let mut r = Report::new("corpus");
    r.input(
        "kind",
        if kind == CorpusKind::Random {
            "random"
        } else {
            "exhaustive"
        },
    )
    .input("spec", spec)
    .input("mode", mode);
    r.output("size", ideals.len());
    macaulay_section(&mut r, &ideals, spec.d_max, mode)?;
    if lex_probe {
        r.output("lex_sharpness", lex_sharpness_report(spec.n_vars.1, spec.degrees.1));
    }
    Ok((r, ideals_to_json(&ideals)))
}

pub fn cmd_hermitian(m: &HermitianBiform, norm: Option<(usize, usize)>, l: u32) -> Result<Report> {
    let n = m.n_vars();
    let (s, t) = norm.unwrap_or((n, 0));
    let norm = SignedNorm::new(s, t)?;
    let mut r = Report::new("hermitian");
    r.input("biform", macaulay_core::io::BiformDoc::from_biform(m))
        .input("s", s)
        .input("t", t)
        .input("l", l);

    let signature = m.signature();
    let product = m.multiply_signed_norm(norm)?;
    r.output("signature", signature)
        .output("rank", signature.rank())
        .output("product_rank", product.rank());

    match verify_rank_interval(m, norm)? {
        Some(check) => {
            r.output("rank_interval", &check.interval)
                .verdict("rank_interval", check.ok);
        }
        None => {
            r.not_applicable("rank_interval");
        }
    }
    let rank = signature.rank();
    if rank >= 1 && n >= 2 && rank < n as u64 {
        let closed = rank_interval_closed_form(rank, n)?;
        r.output("closed_form_interval", &closed)
            .verdict("closed_form_interval", closed.contains(product.rank()));
    } else {
        r.not_applicable("closed_form_interval");
    }

    let sos_keys = [
        "sos_p_lower_bound",
        "sos_q_upper_bound",
        "sos_rank_interval",
        "sos_pure_square_bound",
    ];
    if l == 0 {
        sos_keys.iter().for_each(|k| {
            r.not_applicable(k);
        });
        return Ok(r);
    }
    let norm_power = m.multiply_norm_power(l);
    r.output("norm_power_is_sum_of_squares", norm_power.is_sum_of_squares());
    match verify_sos_bounds(m, l)? {
        Some(c) => {
            r.output("norm_power_rank", c.product_rank)
                .output("p_lower_bound", macaulay_core::io::format_rational(&c.p_lower))
                .output("q_upper_bound", c.q_upper.to_string())
                .output(
                    "q_upper_bound_alt_shift",
                    q_upper_bound_alt_shift(signature.p, n, l)?.to_string(),
                )
                .output("sos_rank_interval", &c.interval);
            r.verdict("sos_p_lower_bound", c.p_ok)
                .verdict("sos_q_upper_bound", c.q_ok)
                .verdict("sos_rank_interval", c.interval_ok);
            match c.pure_sos_ok {
                Some(ok) => r.verdict("sos_pure_square_bound", ok),
                None => r.not_applicable("sos_pure_square_bound"),
            };
        }
        None => sos_keys.iter().for_each(|k| {
            r.not_applicable(k);
        }),
    }
    Ok(r)
}

pub fn cmd_min_sos(m: &HermitianBiform, l_max: u32) -> Report {
    let mut r = Report::new("min-sos");
    r.input("biform", macaulay_core::io::BiformDoc::from_biform(m))
        .input("l_max", l_max);
    r.output("signature", m.signature());
    r.output("min_exponent", find_min_sos_exponent(m, l_max));
    r
}
