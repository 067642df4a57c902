#![allow(dead_code)]

use crossed_hopf::group::{builtin_group, group_algebra, sweedler_fixture};
use crossed_hopf::hopf::HopfAlgebra;
use crossed_hopf::io::{hopf_from_value, hopf_to_value};
use crossed_hopf::{Field, Report};
use serde_json::Value;

pub const GROUPS: [&str; 5] = ["Z2", "Z3", "Z4", "Z2xZ2", "S3"];

pub fn kpi(name: &str) -> HopfAlgebra {
    group_algebra(&builtin_group(name).unwrap())
}

pub fn sweedler() -> HopfAlgebra {
    sweedler_fixture(Field::Rational).unwrap()
}

/// Rebuilds `h` after editing its JSON form.
pub fn edited(h: &HopfAlgebra, edit: impl FnOnce(&mut Value)) -> HopfAlgebra {
    let mut v = hopf_to_value(h);
    edit(&mut v);
    hopf_from_value(&v).unwrap()
}

#[track_caller]
pub fn assert_passes(r: &Report, what: &str) {
    if let Some(c) = r.first_failure() {
        panic!("{what}: {c}");
    }
}
