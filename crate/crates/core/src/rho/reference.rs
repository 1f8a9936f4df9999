//! Published six-digit values of `(ρ⁻, ρ∘, ρ⁺)`, used as a regression target.

/// `(d, ρ⁻, ρ∘, ρ⁺)` for `d = 8..=35`.
pub const REFERENCE_RHO_TABLE: [(u32, f64, f64, f64); 28] = [
    (8, 3.38859, 3.14086, 2.13730),
    (9, 3.85428, 3.59394, 2.52065),
    (10, 4.31894, 4.04931, 2.90984),
    (11, 4.78630, 4.50661, 3.30377),
    (12, 5.25481, 4.96566, 3.70286),
    (13, 5.72466, 5.42625, 4.10615),
    (14, 6.19563, 5.88821, 4.51316),
    (15, 6.66760, 6.35143, 4.92352),
    (16, 7.14049, 6.81577, 5.33689),
    (17, 7.61421, 7.28115, 5.75298),
    (18, 8.08869, 7.74749, 6.17156),
    (19, 8.56386, 8.21469, 6.59241),
    (20, 9.03967, 8.68271, 7.01536),
    (21, 9.51608, 9.15149, 7.44025),
    (22, 9.99303, 9.62096, 7.86693),
    (23, 10.4705, 10.0911, 8.29529),
    (24, 10.9485, 10.5619, 8.72522),
    (25, 11.4269, 11.0332, 9.15661),
    (26, 11.9057, 11.5051, 9.58938),
    (27, 12.3849, 11.9775, 10.0234),
    (28, 12.8646, 12.4504, 10.4587),
    (29, 13.3445, 12.9237, 10.8952),
    (30, 13.8249, 13.3975, 11.3328),
    (31, 14.3055, 13.8717, 11.7714),
    (32, 14.7864, 14.3464, 12.2110),
    (33, 15.2677, 14.8214, 12.6515),
    (34, 15.7492, 15.2967, 13.0930),
    (35, 16.2310, 15.7725, 13.5353),
];

/// `(d, ρ⁻, ρ⁺)` for the orders below the table, plus `ρ₇∘`.
pub const REFERENCE_LOW_ORDERS: [(u32, f64, Option<f64>, f64); 2] = [
    (6, 2.46963, None, 1.39766),
    (7, 2.9324, Some(2.69068), 1.77221),
];

/// Reference row for `d`, if tabulated.
pub fn reference_row(d: u32) -> Option<(f64, f64, f64)> {
    REFERENCE_RHO_TABLE
        .iter()
        .find(|r| r.0 == d)
        .map(|&(_, m, c, p)| (m, c, p))
}

/// Relative error of `computed` against a six-digit reference value.
pub fn relative_error(reference: f64, computed: f64) -> f64 {
    (computed - reference).abs() / reference.abs()
}
