//! CSV tables for enumerations and chains. Fields never contain commas:
//! words use dots, lists inside a field use `;` or `>`.

use lsfan_core::ls_fan;
use lsfan_core::{FanElement, StratPoset};

use crate::error::CliError;

pub fn fan_elements_to_csv(
    p: &StratPoset,
    elements: &[FanElement],
) -> Result<String, CliError> {
    let mut out = String::from("index,degree,weight,support,coeffs\n");
    for (i, a) in elements.iter().enumerate() {
        let weight = ls_fan::weight_of(p, a);
        let weight_str: Vec<String> =
            weight.coords().iter().map(|c| c.to_string()).collect();
        let supp = a.support_desc(p);
        let supp_str: Vec<String> =
            supp.iter().map(|&v| p.vertex(v).word_string()).collect();
        let coeff_str: Vec<String> = supp
            .iter()
            .map(|&v| format!("{}={}", p.vertex(v).word_string(), a.coeff(v)))
            .collect();
        out.push_str(&format!(
            "{i},{},{},{},{}\n",
            a.degree(),
            weight_str.join(" "),
            supp_str.join(">"),
            coeff_str.join(";")
        ));
    }
    Ok(out)
}

pub fn chains_to_csv(p: &StratPoset) -> String {
    let mut out = String::from("index,length,vertices,bonds,bond_product\n");
    for (i, chain) in p.maximal_chains().iter().enumerate() {
        let verts: Vec<String> =
            chain.elems.iter().map(|&v| p.vertex(v).word_string()).collect();
        let bonds: Vec<String> = chain.bonds.iter().map(|b| b.to_string()).collect();
        out.push_str(&format!(
            "{i},{},{},{},{}\n",
            chain.len(),
            verts.join(">"),
            bonds.join(";"),
            chain.bond_product()
        ));
    }
    out
}

pub fn character_to_csv(terms: &[super::json::CharacterTermJson]) -> String {
    let mut out = String::from("weight,mult\n");
    for t in terms {
        let w: Vec<String> = t.weight.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("{},{}\n", w.join(" "), t.mult));
    }
    out
}
