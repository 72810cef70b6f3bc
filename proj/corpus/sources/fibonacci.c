#include <stdio.h>

int main()
{
    int n, i;
    long first = 0, second = 1, next;

    printf("How many terms? ");
    scanf("%d", &n);
    if (n < 1) {
        printf("Enter a positive number\n");
        return 1;
    }
    printf("Fibonacci series: ");
    for (i = 0; i < n; i++) {
        if (i <= 1)
            next = i;
        else {
            next = first + second;
            first = second;
            second = next;
        }
        printf("%ld ", next);
    }
    printf("\n");
    return 0;
}
