//! Built-in inputs, so the paper-verification suite and quick experiments
//! need no input files.
//!
//! Complexes: `point`, `empty`, `s0`, `sphereN`, `circleM` (M >= 3),
//! `simplexN`, `torus7`, `rp2_6`. Presentations: `hatcher`, `higman`,
//! `higmanN` (cyclic N-generator analog), `bsM_N` (Baumslag-Solitar),
//! `freeN`, `cyclicN`.

use acyclo_core::{presentation, simplicial, Presentation, SimplicialComplex};

pub enum Preset {
    Complex(SimplicialComplex),
    Presentation(Presentation),
}

pub fn lookup(name: &str) -> Option<Preset> {
    let name = name.trim();
    match name {
        "point" => return Some(Preset::Complex(simplicial::point())),
        "empty" => return Some(Preset::Complex(simplicial::empty())),
        "s0" => return Some(Preset::Complex(simplicial::s0())),
        "torus7" => return Some(Preset::Complex(simplicial::torus7())),
        "rp2_6" | "rp2-6" | "rp2" => return Some(Preset::Complex(simplicial::rp2_6())),
        "hatcher" => return Some(Preset::Presentation(presentation::hatcher())),
        "higman" => return Some(Preset::Presentation(presentation::higman())),
        _ => {}
    }
    fn parse_suffix<T: std::str::FromStr>(name: &str, prefix: &str) -> Option<T> {
        name.strip_prefix(prefix)?.parse().ok()
    }
    if let Some(n) = parse_suffix::<u32>(name, "sphere") {
        return Some(Preset::Complex(simplicial::sphere(n)));
    }
    if let Some(m) = parse_suffix::<u32>(name, "circle") {
        return simplicial::circle(m).ok().map(Preset::Complex);
    }
    if let Some(n) = parse_suffix::<u32>(name, "simplex") {
        return Some(Preset::Complex(simplicial::simplex(n)));
    }
    if let Some(n) = parse_suffix::<usize>(name, "higman") {
        return presentation::higman_n(n).ok().map(Preset::Presentation);
    }
    if let Some(n) = parse_suffix::<usize>(name, "free") {
        return Some(Preset::Presentation(presentation::free(n)));
    }
    if let Some(n) = parse_suffix::<u64>(name, "cyclic") {
        return presentation::cyclic(n).ok().map(Preset::Presentation);
    }
    if let Some(rest) = name.strip_prefix("bs") {
        let parts: Vec<&str> = rest.split('_').collect();
        if let [m, n] = parts.as_slice() {
            if let (Ok(m), Ok(n)) = (m.parse(), n.parse()) {
                return presentation::baumslag_solitar(m, n)
                    .ok()
                    .map(Preset::Presentation);
            }
        }
    }
    None
}

/// Names listed in `--help` and the README.
pub const PRESET_SUMMARY: &str = "complexes: point, empty, s0, sphereN, circleM (M>=3), \
simplexN, torus7, rp2_6; presentations: hatcher, higman, higmanN, bsM_N, freeN, cyclicN";

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_names_resolve() {
        assert!(matches!(lookup("sphere2"), Some(Preset::Complex(_))));
        assert!(matches!(lookup("circle5"), Some(Preset::Complex(_))));
        assert!(matches!(lookup("hatcher"), Some(Preset::Presentation(_))));
        assert!(matches!(lookup("higman"), Some(Preset::Presentation(_))));
        assert!(matches!(lookup("higman6"), Some(Preset::Presentation(_))));
        assert!(matches!(lookup("bs1_2"), Some(Preset::Presentation(_))));
        assert!(matches!(lookup("free2"), Some(Preset::Presentation(_))));
        assert!(lookup("circle2").is_none());
        assert!(lookup("nonsense").is_none());
    }

    #[test]
    fn higman_preset_matches_higman4() {
        let (Some(Preset::Presentation(a)), Some(Preset::Presentation(b))) =
            (lookup("higman"), lookup("higman4"))
        else {
            panic!("presets missing");
        };
        assert_eq!(a, b);
    }
}
