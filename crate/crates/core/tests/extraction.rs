mod common;

use common::{Fixture, FIXTURES};
use sixblock_core::coloring::Di2Outcome;
use sixblock_core::subdivision::extract::{extract_from_adc_d1, extract_from_adc_d3, Extraction};
use sixblock_core::{color_di2, decompose, verify_subdivision, AntidirectedCycle, CyclePattern};

fn run(f: &Fixture) -> Option<Extraction> {
    let (d, t) = f.build();
    assert!(t.is_final(&d), "{}: tree is not final", f.case);
    let cycle = AntidirectedCycle { vertices: f.cycle.to_vec() };
    let e = match f.family() {
        "d1" => extract_from_adc_d1(&d, &t, &cycle, f.k).ok(),
        "d3" => extract_from_adc_d3(&d, &t, &cycle, f.k).ok(),
        _ => {
            let dec = decompose(&d, &t, f.k).unwrap();
            dec.classes.iter().find_map(|c| match color_di2(&d, &t, c, f.k) {
                Di2Outcome::Witness(e) => Some(e),
                Di2Outcome::Split(_) => None,
            })
        }
    }?;
    verify_subdivision(&d, &e.witness, &CyclePattern::six_block(f.k)).unwrap();
    Some(e)
}

#[test]
fn every_fixture_yields_its_case() {
    for f in FIXTURES {
        let e = run(f).unwrap_or_else(|| panic!("{} (k={}) produced no witness", f.case, f.k));
        assert!(e.case.starts_with(f.case), "expected {} got {}", f.case, e.case);
    }
}

#[test]
fn each_extractor_family_is_covered() {
    for fam in ["d1", "d2", "d3"] {
        assert!(FIXTURES.iter().filter(|f| f.family() == fam).count() >= 2, "{fam}");
    }
}

#[test]
fn cycles_are_antidirected() {
    for f in FIXTURES.iter().filter(|f| !f.cycle.is_empty()) {
        let (d, _) = f.build();
        assert!(AntidirectedCycle { vertices: f.cycle.to_vec() }.is_valid_in(&d), "{}", f.case);
    }
}
