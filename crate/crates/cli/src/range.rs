use std::fmt;
use std::str::FromStr;

/// `start:end:step`, covering `start, start+step, ...` up to the last value
/// not above `end`. A bare `N` is the one-point range.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NRange {
    pub start: u64,
    pub end: u64,
    pub step: u64,
}

impl NRange {
    pub fn values(&self) -> impl Iterator<Item = u64> {
        (self.start..=self.end).step_by(self.step as usize)
    }

    pub fn len(&self) -> usize {
        ((self.end - self.start) / self.step + 1) as usize
    }
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| t.trim().parse::<u64>().map_err(|_| format!("not a non-negative integer: {t:?}"));
        let parts: Vec<&str> = s.split(':').collect();
        let (start, end, step) = match parts.as_slice() {
            [n] => {
                let n = parse(n)?;
                (n, n, 1)
            }
            [a, b] => (parse(a)?, parse(b)?, 1),
            [a, b, c] => (parse(a)?, parse(b)?, parse(c)?),
            _ => return Err(format!("expected N or start:end:step, got {s:?}")),
        };
        if step == 0 {
            return Err("step must be at least 1".into());
        }
        if start > end {
            return Err(format!("empty range {s:?}"));
        }
        Ok(NRange { start, end, step })
    }
}

impl fmt::Display for NRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.start, self.end, self.step)
    }
}
