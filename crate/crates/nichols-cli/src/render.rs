//! Text rendering helpers.

use nichols::freealgebra::BraidingMatrix;

/// A root as a sum of simple roots, e.g. `3a1+2a2`.
pub fn root(alpha: &[u32]) -> String {
    let parts: Vec<String> = alpha
        .iter()
        .enumerate()
        .filter(|(_, &a)| a > 0)
        .map(|(i, &a)| if a == 1 { format!("a{}", i + 1) } else { format!("{a}a{}", i + 1) })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+")
    }
}

pub fn matrix<T: std::fmt::Display>(rows: &[Vec<T>]) -> String {
    rows.iter()
        .map(|r| format!("  [{}]\n", r.iter().map(|x| format!("{x:>3}")).collect::<Vec<_>>().join(" ")))
        .collect()
}

pub fn m_entry(m: &Option<u32>) -> String {
    m.map_or_else(|| "-".into(), |v| v.to_string())
}

pub fn braiding(b: &BraidingMatrix) -> String {
    format!("N = {}\n{}", b.conductor(), matrix(b.exps()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_render_as_sums() {
        assert_eq!(root(&[3, 2]), "3a1+2a2");
        assert_eq!(root(&[0, 1, 1]), "a2+a3");
        assert_eq!(root(&[0, 0]), "0");
    }
}
