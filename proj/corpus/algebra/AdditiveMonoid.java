package algebra;

interface AdditiveMonoid        <T>
    extends AdditiveSemigroup <T> {

    T getZero(); // the additive neutral element

}
