package algebra;

interface AdditiveSemigroup <T> {

    T plus (T right);

}
