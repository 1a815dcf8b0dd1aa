//! Subcommand implementations.

use crate::cache;
use crate::config::{OrientationChoice, RunConfig};
use crate::output;
use anyhow::{anyhow, Result};
use bp_hopf::{alpha1_alpha_t, beta_representative, BpContext, TensorCoset};
use f_invariant::{
    classes_equal_mod_ambiguity, ext2_catalog, f_invariant, kervaire_projection, FClass, FInvCtx,
};
use modular_arith::{Level, ModularCtx};
use std::sync::Arc;

/// Errors that should exit with code 2 (invalid input) rather than 1.
#[derive(Debug)]
pub struct InvalidInput(pub String);

impl std::fmt::Display for InvalidInput {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for InvalidInput {}

fn build_fctx(config: &RunConfig, degree: i64) -> Result<FInvCtx> {
    let nmax = config.nmax_for_degree(degree);
    let modular = Arc::new(ModularCtx::new(config.prime, config.level)?);
    let orientation = modular_arith::orientation(
        &modular,
        nmax.max(2),
        config.orientation == OrientationChoice::Eisenstein,
    )?;
    let bp = Arc::new(BpContext::new(config.prime, nmax.max(2)));
    Ok(FInvCtx::new(bp, modular, orientation, config.precision))
}

fn beta_degree(config: &RunConfig, t: u64, s: u32) -> i64 {
    2 * (t as i64) * ((config.prime as i64).pow(2) - 1) - 2 * (s as i64) * (config.prime as i64 - 1)
}

/// `beta-rep`: print the canonical tensor-coset representative.
pub fn cmd_beta_rep(config: &RunConfig, t: u64, s: u32, r: u32) -> Result<()> {
    if r > 1 {
        return Err(anyhow!(InvalidInput(format!(
            "r = {r} > 1 unsupported: every class in the supported families has order p"
        ))));
    }
    let degree = beta_degree(config, t, s);
    let nmax = config.nmax_for_degree(degree);
    let ctx = BpContext::new(config.prime, nmax);
    // warm the lattice through the cache when configured
    let _ = cache::lattice_with_cache(&ctx, degree, config.cache_dir.as_deref());
    if let Some(dir) = config.cache_dir.as_deref() {
        let _ = cache::store_eta_table(&ctx, dir);
    }
    let coset = beta_representative(&ctx, t, s, r)
        .map_err(|e| anyhow!(InvalidInput(e.to_string())))?;
    emit_coset(config, &coset, &format!("beta_{{{t},{s}}} (r = {r})"))
}

fn emit_coset(config: &RunConfig, coset: &TensorCoset, label: &str) -> Result<()> {
    let text = format!(
        "{label}: degree {}, order p^{}\n  representative: {}\n  cocycle lift: {}",
        coset.degree,
        coset.order_exponent,
        coset.representative.render(),
        coset
            .gamma_lift
            .as_ref()
            .map(|w| w.render())
            .unwrap_or_else(|| "-".into()),
    );
    output::emit(config, text, coset.to_json());
    Ok(())
}

/// Parse an f-inv generator spec: ("beta", t, None) / ("beta", t, Some(s))
/// / ("alpha1*alpha", t, None).
pub fn cmd_f_inv(config: &RunConfig, family: &str, t: u64, s: Option<u32>) -> Result<()> {
    match family {
        "beta" => {
            let s = s.unwrap_or(1);
            let degree = beta_degree(config, t, s);
            let fctx = build_fctx(config, degree)?;
            let _ = cache::lattice_with_cache(&fctx.bp, degree, config.cache_dir.as_deref());
            let rep = beta_representative(&fctx.bp, t, s, 1)
                .map_err(|e| anyhow!(InvalidInput(e.to_string())))?;
            let f = f_invariant(&fctx, &rep)?;
            let closed = closed_form_for_beta(&fctx, t, s)?;
            report_f_inv(config, &fctx, &f, closed, &format!("beta_{{{t},{s}}}"))
        }
        "alpha1*alpha" | "alpha1-alpha" => {
            if config.prime != 2 {
                return Err(anyhow!(InvalidInput("alpha1*alpha_t lives at p = 2".into())));
            }
            let degree = 2 * t as i64 + 2;
            let fctx = build_fctx(config, degree)?;
            let _ = cache::lattice_with_cache(&fctx.bp, degree, config.cache_dir.as_deref());
            let rep = alpha1_alpha_t(&fctx.bp, t)
                .map_err(|e| anyhow!(InvalidInput(e.to_string())))?;
            let f = f_invariant(&fctx, &rep)?;
            let closed = Some(f_invariant::closed::closed_form_alpha1_alpha_t(&fctx, t)?);
            report_f_inv(config, &fctx, &f, closed, &format!("alpha1*alpha_{t}"))
        }
        other => Err(anyhow!(InvalidInput(format!(
            "unknown generator family '{other}'; expected beta or alpha1*alpha"
        )))),
    }
}

fn closed_form_for_beta(fctx: &FInvCtx, t: u64, s: u32) -> Result<Option<FClass>> {
    if s == 1 && !t.is_multiple_of(fctx.p()) {
        return Ok(Some(f_invariant::closed_form_beta_t(fctx, t)?));
    }
    if fctx.p() == 2 && s.is_power_of_two() && s > 1 {
        let i = s.trailing_zeros();
        if t.is_multiple_of(s as u64) {
            let s_odd = t / s as u64;
            if s_odd % 2 == 1 {
                return Ok(Some(f_invariant::closed_form_kervaire_family(fctx, s_odd, i)?));
            }
        }
    }
    Ok(None)
}

fn report_f_inv(
    config: &RunConfig,
    _fctx: &FInvCtx,
    f: &FClass,
    closed: Option<FClass>,
    label: &str,
) -> Result<()> {
    let mut text = format!("f({label}): degree {}, p = {}\n", f.degree, f.p);
    if let Some(s) = &f.structured {
        text.push_str(&format!("  structured: {s}\n"));
    }
    let matches = match &closed {
        Some(c) => Some(classes_equal_mod_ambiguity(f, c)?),
        None => None,
    };
    if let Some(c) = &closed {
        if let Some(s) = &c.structured {
            text.push_str(&format!("  closed form: {s}\n"));
        } else {
            text.push_str("  closed form: (divided congruence)\n");
        }
        text.push_str(&format!(
            "  matches closed form modulo ambiguity: {}\n",
            matches.unwrap()
        ));
    }
    text.push_str(&format!(
        "  ambiguity basis size: {}, precision: {}",
        f.ambiguity.len(),
        f.precision
    ));
    let mut result = f.to_json();
    if let Some(m) = matches {
        result["matches_closed_form_mod_ambiguity"] = serde_json::json!(m);
        if let Some(c) = &closed {
            result["closed_form"] = serde_json::json!(c
                .structured
                .as_ref()
                .map(|s| s.render())
                .unwrap_or_else(|| "divided congruence".into()));
        }
    }
    output::emit(config, text, result);
    if matches == Some(false) {
        return Err(anyhow!("pipeline value differs from the closed form"));
    }
    Ok(())
}

/// `qexp`: emit a base-generator q-expansion bit-exactly.
pub fn cmd_qexp(config: &RunConfig, generator: &str, precision: usize) -> Result<()> {
    let ctx = ModularCtx::new(config.prime, config.level)?;
    let idx = ctx
        .base
        .index_of(generator)
        .map_err(|_| anyhow!(InvalidInput(format!(
            "unknown generator '{generator}' for this level; expected one of: {}",
            ctx.base
                .gens
                .iter()
                .map(|g| g.name.as_str())
                .collect::<Vec<_>>()
                .join(", ")
        ))))?;
    let series = ctx.gen_series(idx, precision);
    let domain = match config.level {
        Level::Three => "cyclotomic",
        Level::One => "rational",
    };
    output::emit(
        config,
        format!("{generator}(q) = {}", series.render(16)),
        serde_json::json!({
            "generator": generator,
            "domain": domain,
            "expansion": series.to_json_with(|c| c.to_json()),
        }),
    );
    Ok(())
}

/// `chern polynomial` and `chern evaluate`.
pub fn cmd_chern_polynomial(config: &RunConfig, dimension: u32) -> Result<()> {
    let poly = chern_criterion::kervaire_chern_polynomial(dimension)
        .map_err(|e| anyhow!(InvalidInput(e.to_string())))?;
    let keys: Vec<String> = poly.terms.keys().map(|m| m.render(&poly.alphabet)).collect();
    output::emit(
        config,
        format!("parity polynomial (dimension {dimension}): {poly}\n  monomial keys: {}", keys.join(", ")),
        serde_json::json!({
            "dimension": dimension,
            "polynomial": poly.render(),
            "monomials": keys,
        }),
    );
    Ok(())
}

pub fn cmd_chern_evaluate(config: &RunConfig, dimension: u32, data: &str) -> Result<()> {
    let parsed: serde_json::Value = serde_json::from_str(data)
        .map_err(|e| anyhow!(InvalidInput(format!("bad Chern data JSON: {e}"))))?;
    let mut numbers = std::collections::BTreeMap::new();
    let obj = parsed
        .as_object()
        .ok_or_else(|| anyhow!(InvalidInput("Chern data must be a JSON object".into())))?;
    for (k, v) in obj {
        let n = v
            .as_i64()
            .ok_or_else(|| anyhow!(InvalidInput(format!("Chern number {k} must be an integer"))))?;
        numbers.insert(k.clone(), n);
    }
    let data = chern_criterion::ChernData { dimension, numbers };
    let (verdict, poly) = chern_criterion::evaluate_manifold(&data)
        .map_err(|e| anyhow!(InvalidInput(e.to_string())))?;
    let verdict_name = match verdict {
        chern_criterion::Verdict::KervaireOne => "kervaire-one",
        chern_criterion::Verdict::BoundsFramed => "bounds-framed",
    };
    output::emit(
        config,
        format!("verdict: {verdict_name} (polynomial {poly})"),
        serde_json::json!({
            "dimension": dimension,
            "verdict": verdict_name,
            "polynomial": poly.render(),
        }),
    );
    Ok(())
}

/// `catalog`: the 2-line generators in internal degree 2^n with closed
/// forms and projection bits.
pub fn cmd_catalog(config: &RunConfig, n: u32) -> Result<()> {
    if config.prime != 2 {
        return Err(anyhow!(InvalidInput("the catalog lives at p = 2".into())));
    }
    let fctx = build_fctx(config, 1 << n)?;
    let gens = ext2_catalog(&fctx, n).map_err(|e| anyhow!(InvalidInput(e.to_string())))?;
    let mut rows = Vec::new();
    let mut text = format!("generators in internal degree 2^{n}:\n");
    for g in &gens {
        let bit = if n >= 3 {
            Some(kervaire_projection(&g.closed_form, n)?)
        } else {
            None
        };
        text.push_str(&format!(
            "  {:<18} f = {:<28} kervaire bit: {}\n",
            g.name,
            g.closed_form
                .structured
                .as_ref()
                .map(|s| s.render())
                .unwrap_or_default(),
            bit.map(|b| b.to_string()).unwrap_or_else(|| "-".into())
        ));
        rows.push(serde_json::json!({
            "name": g.name,
            "f_invariant": g.closed_form.structured.as_ref().map(|s| s.render()),
            "kervaire_bit": bit,
        }));
    }
    output::emit(config, text, serde_json::json!({ "n": n, "generators": rows }));
    Ok(())
}
