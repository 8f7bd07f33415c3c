use std::fmt;

use crate::value::Value;

/// An ordered pair `(top, bottom)` of carrier elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Double<V> {
    pub top: V,
    pub bottom: V,
}

impl<V> Double<V> {
    pub fn new(top: V, bottom: V) -> Self {
        Double { top, bottom }
    }

    pub fn get(&self, c: Component) -> &V {
        match c {
            Component::Top => &self.top,
            Component::Bottom => &self.bottom,
        }
    }

    pub fn swapped(self) -> Self {
        Double::new(self.bottom, self.top)
    }
}

impl<V: fmt::Display> fmt::Display for Double<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.top, self.bottom)
    }
}

impl<V: Value> Value for Double<V> {
    fn same(&self, other: &Self) -> bool {
        self.top.same(&other.top) && self.bottom.same(&other.bottom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Component {
    Top,
    Bottom,
}

impl Component {
    pub fn letter(self) -> char {
        match self {
            Component::Top => 'T',
            Component::Bottom => 'B',
        }
    }
}
