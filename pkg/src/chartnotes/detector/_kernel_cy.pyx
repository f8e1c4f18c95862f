# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled persistence sweep. Mirrors _kernel_py.persistence_sweep exactly;
see that module for the algorithm description."""

from cpython.mem cimport PyMem_Free, PyMem_Malloc

from libc.math cimport NAN
from libc.stdlib cimport qsort


cdef struct Entry:
    double value
    Py_ssize_t index


cdef int _cmp_entry(const void* a, const void* b) noexcept nogil:
    # Visit order: value descending, index ascending on ties.
    cdef const Entry* ea = <const Entry*> a
    cdef const Entry* eb = <const Entry*> b
    if ea.value > eb.value:
        return -1
    if ea.value < eb.value:
        return 1
    if ea.index < eb.index:
        return -1
    if ea.index > eb.index:
        return 1
    return 0


cdef Py_ssize_t _find(Py_ssize_t* parent, Py_ssize_t x) noexcept nogil:
    cdef Py_ssize_t root = x
    cdef Py_ssize_t nxt
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        nxt = parent[x]
        parent[x] = root
        x = nxt
    return root


def persistence_sweep(values):
    """Drop-in replacement for the pure-Python sweep (same contract)."""
    cdef Py_ssize_t n = len(values)
    cdef double* v = <double*> PyMem_Malloc(n * sizeof(double))
    cdef Entry* entries = <Entry*> PyMem_Malloc(n * sizeof(Entry))
    cdef Py_ssize_t* parent = <Py_ssize_t*> PyMem_Malloc(n * sizeof(Py_ssize_t))
    cdef Py_ssize_t* birth_index = <Py_ssize_t*> PyMem_Malloc(n * sizeof(Py_ssize_t))
    cdef char* visited = <char*> PyMem_Malloc(n * sizeof(char))
    if v == NULL or entries == NULL or parent == NULL or birth_index == NULL or visited == NULL:
        PyMem_Free(v); PyMem_Free(entries); PyMem_Free(parent)
        PyMem_Free(birth_index); PyMem_Free(visited)
        raise MemoryError()

    cdef Py_ssize_t i, idx
    cdef Py_ssize_t left_root, right_root, elder, younger, lb, rb, dead, survivor
    cdef bint left_in, right_in, left_elder
    pairs = []
    try:
        for i in range(n):
            v[i] = values[i]
            entries[i].value = v[i]
            entries[i].index = i
            parent[i] = i
            birth_index[i] = i
            visited[i] = 0

        qsort(entries, n, sizeof(Entry), _cmp_entry)

        for i in range(n):
            idx = entries[i].index
            left_in = idx > 0 and visited[idx - 1]
            right_in = idx < n - 1 and visited[idx + 1]
            visited[idx] = 1
            if not left_in and not right_in:
                continue  # birth: idx stays its own root
            if left_in and right_in:
                left_root = _find(parent, idx - 1)
                right_root = _find(parent, idx + 1)
                lb = birth_index[left_root]
                rb = birth_index[right_root]
                # Elder rule: the earlier-born component survives, i.e. the
                # one with the higher birth value, lower index on ties.
                if v[lb] != v[rb]:
                    left_elder = v[lb] > v[rb]
                else:
                    left_elder = lb < rb
                if left_elder:
                    elder = left_root; younger = right_root
                else:
                    elder = right_root; younger = left_root
                dead = birth_index[younger]
                pairs.append((dead, v[dead], v[idx], False))
                parent[younger] = elder
                parent[idx] = elder
            elif left_in:
                parent[idx] = _find(parent, idx - 1)
            else:
                parent[idx] = _find(parent, idx + 1)

        survivor = birth_index[_find(parent, 0)]
        pairs.append((survivor, v[survivor], NAN, True))
    finally:
        PyMem_Free(v); PyMem_Free(entries); PyMem_Free(parent)
        PyMem_Free(birth_index); PyMem_Free(visited)
    return pairs
