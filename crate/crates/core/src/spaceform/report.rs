use std::fmt::Write;

use super::{CheckLedger, SpaceFormCertificate, SpaceFormSpec};

/// Key-value text report with a fixed field order.
pub fn render_report(cert: &SpaceFormCertificate, ledger: &CheckLedger) -> String {
    let mut out = String::new();
    let mut kv = |k: &str, v: String| writeln!(out, "{k}: {v}").expect("write to string");
    kv("case", cert.spec.case_name().to_string());
    match cert.spec {
        SpaceFormSpec::Cyclic { m, p } => {
            kv("m", m.to_string());
            kv("p", p.to_string());
        }
        SpaceFormSpec::Tetrahedral { m, k } => {
            kv("m", m.to_string());
            kv("k", k.to_string());
        }
        SpaceFormSpec::Icosahedral { m } => kv("m", m.to_string()),
    }
    kv("order_spin", cert.pi_hat.order().to_string());
    kv("order_so4", cert.pi.order().to_string());
    kv("order_extended_spin", cert.gamma_hat.order().to_string());
    kv("order_extended_so4", cert.gamma.order().to_string());
    kv("abelianization", ledger.abelianization.to_string());
    kv("involution", cert.iota_hat.to_string());
    for c in &ledger.checks {
        let verdict = if c.passed { "pass".to_string() } else { format!("FAIL ({})", c.witness.as_deref().unwrap_or("")) };
        kv(&format!("check.{}", c.name), verdict);
    }
    kv("all_passed", ledger.all_passed().to_string());
    out
}
