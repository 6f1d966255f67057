use std::fmt;

/// A point of the integer lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    pub fn step(self, dir: Step) -> Self {
        match dir {
            Step::East => Self::new(self.x + 1, self.y),
            Step::North => Self::new(self.x, self.y + 1),
        }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// A unit step: `(1,0)` or `(0,1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    East,
    North,
}

impl Step {
    pub fn letter(self) -> char {
        match self {
            Step::East => 'E',
            Step::North => 'N',
        }
    }
}

/// A monotone lattice path, stored as its start point and step sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    start: LatticePoint,
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(start: LatticePoint, steps: Vec<Step>) -> Self {
        Self { start, steps }
    }

    /// Parses a step string such as `"NNEE"`.
    pub fn from_step_string(start: LatticePoint, s: &str) -> Option<Self> {
        let steps = s
            .chars()
            .map(|c| match c {
                'E' => Some(Step::East),
                'N' => Some(Step::North),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Self::new(start, steps))
    }

    pub fn start(&self) -> LatticePoint {
        self.start
    }

    pub fn end(&self) -> LatticePoint {
        self.steps.iter().fold(self.start, |p, &s| p.step(s))
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Every point visited, start and end included.
    pub fn points(&self) -> Vec<LatticePoint> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut p = self.start;
        out.push(p);
        for &s in &self.steps {
            p = p.step(s);
            out.push(p);
        }
        out
    }

    /// Each step with the point it leaves from.
    pub fn steps_from(&self) -> impl Iterator<Item = (LatticePoint, Step)> + '_ {
        let mut p = self.start;
        self.steps.iter().map(move |&s| {
            let from = p;
            p = p.step(s);
            (from, s)
        })
    }

    pub fn step_string(&self) -> String {
        self.steps.iter().map(|s| s.letter()).collect()
    }
}

/// A tuple of paths, the `i`-th running from `u_i` to `v_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathFamily {
    pub paths: Vec<LatticePath>,
}

impl PathFamily {
    pub fn new(paths: Vec<LatticePath>) -> Self {
        Self { paths }
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// No lattice point is shared by two paths.
    pub fn is_vertex_disjoint(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.paths
            .iter()
            .flat_map(|p| p.points())
            .all(|pt| seen.insert(pt))
    }

    /// Number of vertical steps on the line `x = column`.
    pub fn sigma(&self, column: i64) -> u32 {
        self.paths
            .iter()
            .flat_map(|p| p.steps_from())
            .filter(|(from, s)| *s == Step::North && from.x == column)
            .count() as u32
    }

    /// 1 if path `i` leaves its start point vertically.
    pub fn starts_vertically(&self, i: usize) -> u32 {
        u32::from(self.paths[i].steps().first() == Some(&Step::North))
    }

    /// 1 if path `i` arrives at its end point vertically.
    pub fn ends_vertically(&self, i: usize) -> u32 {
        u32::from(self.paths[i].steps().last() == Some(&Step::North))
    }

    /// Step strings of the paths, separated by spaces (`-` for an empty path).
    pub fn step_strings(&self) -> String {
        self.paths
            .iter()
            .map(|p| {
                let s = p.step_string();
                if s.is_empty() {
                    "-".to_string()
                } else {
                    s
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for PathFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.step_strings())
    }
}
