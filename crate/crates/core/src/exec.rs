//! Choice between the rayon data-parallel path and a plain sequential loop.
//! Both produce identical, order-stable output.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Exec {
    Sequential,
    /// Uses rayon when the `parallel` feature is on, else runs sequentially.
    #[default]
    Parallel,
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// `items.map(f)` in input order.
    pub fn map<T, R, F>(self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            use rayon::prelude::*;
            return items.into_par_iter().map(f).collect();
        }
        items.into_iter().map(f).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_stable() {
        let v: Vec<u64> = (0..1000).collect();
        let a = Exec::Parallel.map(v.clone(), |x| x * x);
        let b = Exec::Sequential.map(v, |x| x * x);
        assert_eq!(a, b);
    }
}
