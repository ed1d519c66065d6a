/// Spec documents shipped with the tool, by name.
pub const BUILTIN_SPECS: [(&str, &str); 12] = [
    ("scaling", include_str!("../../specs/scaling.spec")),
    (
        "scaling-modified",
        include_str!("../../specs/scaling-modified.spec"),
    ),
    ("se2", include_str!("../../specs/se2.spec")),
    ("se2-j3", include_str!("../../specs/se2-j3.spec")),
    ("so3", include_str!("../../specs/so3.spec")),
    ("sl2-b2", include_str!("../../specs/sl2-b2.spec")),
    ("sl2-b3", include_str!("../../specs/sl2-b3.spec")),
    ("sl2-b4", include_str!("../../specs/sl2-b4.spec")),
    ("gl2-b2", include_str!("../../specs/gl2-b2.spec")),
    ("gl2-b3", include_str!("../../specs/gl2-b3.spec")),
    ("gl2-b4", include_str!("../../specs/gl2-b4.spec")),
    (
        "gl2-b3-covariants",
        include_str!("../../specs/gl2-b3-covariants.spec"),
    ),
];

/// Text of a built-in spec; `name` may carry a `.spec` suffix.
pub fn builtin_spec(name: &str) -> Option<&'static str> {
    let name = name.strip_suffix(".spec").unwrap_or(name);
    BUILTIN_SPECS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| *t)
}
