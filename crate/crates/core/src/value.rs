use std::fmt;

use crate::exact::{decimal6, ExactValue};

/// Result of evaluating a distance or similarity.
///
/// `defined` is false only for the 0/0 cases of the matching similarities;
/// `value` is meaningless in that case.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasureValue {
    defined: bool,
    value: f64,
    exact: Option<ExactValue>,
}

impl MeasureValue {
    pub fn exact(exact: ExactValue) -> Self {
        MeasureValue {
            defined: true,
            value: exact.to_f64(),
            exact: Some(exact),
        }
    }

    pub fn approx(value: f64) -> Self {
        MeasureValue {
            defined: true,
            value,
            exact: None,
        }
    }

    pub fn undefined() -> Self {
        MeasureValue {
            defined: false,
            value: f64::NAN,
            exact: None,
        }
    }

    pub fn is_defined(&self) -> bool {
        self.defined
    }

    /// Decimal value, `None` when undefined.
    pub fn value(&self) -> Option<f64> {
        self.defined.then_some(self.value)
    }

    pub fn exact_value(&self) -> Option<&ExactValue> {
        self.exact.as_ref()
    }

    /// Exact rendering when known, otherwise six-place decimal.
    pub fn render_exact(&self) -> String {
        match (&self.exact, self.defined) {
            (_, false) => "undefined".to_owned(),
            (Some(e), _) => e.to_string(),
            (None, _) => decimal6(self.value),
        }
    }

    pub fn render_decimal(&self) -> String {
        if self.defined {
            decimal6(self.value)
        } else {
            "undefined".to_owned()
        }
    }
}

impl fmt::Display for MeasureValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_exact())
    }
}
