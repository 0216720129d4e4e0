import numpy as np

from .._validation import check_vector


class ProblemInstance:
    """A bounded real-vector objective built from problem data.

    Subclasses define ``name``, ``dimension``, ``space()`` and ``cost(x)``.
    Calling the instance validates the length of ``x`` and returns the cost,
    so an instance can be handed straight to any optimizer.
    """

    name = "problem"

    @property
    def dimension(self):
        raise NotImplementedError

    def space(self):
        raise NotImplementedError

    def cost(self, x):
        raise NotImplementedError

    def __call__(self, x):
        return self.cost(check_vector(x, self.dimension))


def read_rows(path):
    """Numeric rows of a whitespace/comma separated text file, skipping ``#`` comments."""
    rows = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            rows.append(line.replace(",", " ").split())
    return rows


def format_number(value):
    value = float(value)
    if value.is_integer():
        return str(int(value))
    return repr(value)


def write_rows(path, rows, header=None):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        if header:
            for line in header.splitlines():
                fh.write(f"# {line}\n")
        for row in rows:
            fh.write(" ".join(r if isinstance(r, str) else format_number(r) for r in row) + "\n")


def as_matrix(rows):
    return np.array([[float(v) for v in row] for row in rows], dtype=float)
