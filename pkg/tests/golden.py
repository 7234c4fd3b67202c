"""Reference data transcribed from the source tables, frozen for the golden tests."""

# reduced basis of the triangle graph (tilde-A 3)
TILDE_A3_BASIS = [
    "p1*p1 - p1",
    "p2*p2 - p2",
    "p3*p3 - p3",
    "p1*p2*p1 - t*p1",
    "p2*p1*p2 - t*p2",
    "p2*p3*p2 - t*p2",
    "p3*p2*p3 - t*p3",
    "p1*p3*p1 - t*p1",
    "p3*p1*p3 - t*p3",
]

# basis printed for tilde-C 2; the last element is reproduced verbatim
TILDE_C2_BASIS = [
    "p1*p1 - p1",
    "p2*p2 - p2",
    "p3*p3 - p3",
    "p1*p2*p1*p2 - t*p1*p2",
    "p2*p1*p2*p1 - t*p2*p1",
    "p2*p3*p2*p3 - t*p2*p3",
    "p3*p2*p3*p2 - t*p3*p2",
    "p3*p1 - p1*p3",
    "p2*p3*p2*p1*p3 - t*p2*p1*p3",
    "p1*p3*p2*p1*p3 - t*p1*p3*p2",
]

# forbidden subwords listed for the star with centre 2 and five leaves
STAR6_FORBIDDEN = [
    "1,1", "2,2", "3,3", "4,4", "5,5", "6,6",
    "1,2,1", "2,1,2", "2,3,2", "3,2,3", "2,4,2", "4,2,4",
    "2,5,2", "5,2,5", "2,6,2", "6,2,6", "3,1", "4,1",
    "5,1", "6,1", "4,3", "5,3", "6,3", "5,4",
    "6,4", "6,5", "3,2,1,3", "4,2,1,4", "4,2,3,4", "5,2,1,5",
    "5,2,3,5", "5,2,4,5", "6,2,1,6", "6,2,3,6", "6,2,4,6", "6,2,5,6",
    "1,3,2,1", "1,4,2,1", "1,5,2,1", "1,6,2,1", "3,4,2,3", "3,5,2,3",
    "3,6,2,3", "4,5,2,4", "4,6,2,4", "5,6,2,5", "1,3,4,2,1", "1,3,5,2,1",
    "1,3,6,2,1", "1,4,5,2,1", "1,4,6,2,1", "1,5,6,2,1", "3,4,2,1,3", "3,4,5,2,3",
    "3,4,6,2,3", "3,5,2,1,3", "3,5,6,2,3", "3,6,2,1,3", "4,5,2,1,4", "4,5,2,3,4",
    "4,5,6,2,4", "4,6,2,1,4", "4,6,2,3,4", "5,6,2,1,5", "5,6,2,3,5", "5,6,2,4,5",
    "4,2,1,3,4", "5,2,1,3,5", "5,2,1,4,5", "5,2,3,4,5", "6,2,1,3,6", "6,2,1,4,6",
    "6,2,1,5,6", "6,2,3,4,6", "6,2,3,5,6", "6,2,4,5,6", "1,3,4,5,2,1", "1,3,4,6,2,1",
    "1,3,5,6,2,1", "1,4,5,6,2,1", "3,4,5,2,1,3", "3,4,5,6,2,3", "3,4,6,2,1,3", "3,5,6,2,1,3",
    "4,5,6,2,1,4", "4,5,6,2,3,4", "4,5,2,1,3,4", "4,6,2,1,3,4", "5,6,2,1,3,5", "5,6,2,1,4,5",
    "5,6,2,3,4,5", "5,2,1,3,4,5", "6,2,1,3,4,6", "6,2,1,3,5,6", "6,2,1,4,5,6", "6,2,3,4,5,6",
    "1,3,4,5,6,2,1", "3,4,5,6,2,1,3", "4,5,6,2,1,3,4", "5,6,2,1,3,4,5", "6,2,1,3,4,5,6",
]
