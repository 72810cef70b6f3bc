#include <stdio.h>

/* 1 when n is prime */
int is_prime(int n)
{
    int i;
    if (n < 2)
        return 0;
    for (i = 2; i * i <= n; i++) {
        if (n % i == 0)
            return 0;
    }
    return 1;
}

int main()
{
    int low, high, n, count = 0;
    printf("Enter the range (low high): ");
    scanf("%d %d", &low, &high);
    if (low > high) {
        n = low;
        low = high;
        high = n;
    }
    printf("Primes between %d and %d:\n", low, high);
    for (n = low; n <= high; n++) {
        if (is_prime(n)) {
            printf("%d ", n);
            count++;
        }
    }
    printf("\nTotal: %d\n", count);
    return 0;
}
